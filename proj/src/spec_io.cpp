#include "logriemann/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "surface_index.hpp"

namespace lrs {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw SurfaceError("parse-error", what); }

const json& field(const json& obj, const char* key, const std::string& ctx) {
  if (!obj.is_object() || !obj.contains(key)) parse_fail(ctx + ": missing key '" + key + "'");
  return obj.at(key);
}

std::string str(const json& j, const std::string& ctx) {
  if (!j.is_string()) parse_fail(ctx + ": expected a string");
  return j.get<std::string>();
}

Complex point(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    parse_fail(ctx + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Side side_of(const json& j, const std::string& ctx) {
  std::string s = str(j, ctx);
  if (s == "top") return Side::Top;
  if (s == "bottom") return Side::Bottom;
  parse_fail(ctx + ": side must be \"top\" or \"bottom\"");
}

SideRef side_ref(const json& j, const std::string& ctx) {
  if (j.is_array()) {
    if (j.size() != 3) parse_fail(ctx + ": expected [sheet, slit, side]");
    return {str(j[0], ctx), str(j[1], ctx), side_of(j[2], ctx)};
  }
  return {str(field(j, "sheet", ctx), ctx), str(field(j, "slit", ctx), ctx), side_of(field(j, "side", ctx), ctx)};
}

json point_json(Complex z) { return json::array({z.real(), z.imag()}); }

json side_json(const SideRef& r) { return json::array({r.sheet, r.slit, to_string(r.side)}); }

}  // namespace

SheetComplex build_from_spec(const json& doc) {
  if (!doc.is_object()) parse_fail("document must be a JSON object");
  SheetComplex c;
  c.z0 = point(field(doc, "z0", "document"), "z0");

  const json& protos = field(doc, "protos", "document");
  if (!protos.is_object()) parse_fail("protos must be an object");
  for (const auto& [id, slits] : protos.items()) {
    SheetProto p{id, {}};
    if (!slits.is_array()) parse_fail("proto " + id + ": expected a list of slits");
    for (const auto& s : slits) {
      std::string ctx = "proto " + id + " slit";
      p.slits.push_back({str(field(s, "id", ctx), ctx), point(field(s, "foot", ctx), ctx),
                         str(field(s, "ram", ctx), ctx)});
    }
    c.protos[id] = std::move(p);
  }

  const json& sheets = field(doc, "core_sheets", "document");
  if (!sheets.is_object()) parse_fail("core_sheets must be an object");
  for (const auto& [id, proto] : sheets.items()) c.core_sheets[id] = str(proto, "core sheet " + id);

  if (doc.contains("families")) {
    const json& fams = doc.at("families");
    if (!fams.is_array()) parse_fail("families must be a list");
    for (const auto& f : fams) {
      HalfLineFamily h;
      h.id = str(field(f, "id", "family"), "family id");
      std::string ctx = "family " + h.id;
      h.proto = str(field(f, "proto", ctx), ctx);
      h.ram = str(field(f, "ram", ctx), ctx);
      h.chain_slit = str(field(f, "chain_slit", ctx), ctx);
      h.attach = side_ref(field(f, "attach", ctx), ctx + " attach");
      std::string o = str(field(f, "orientation", ctx), ctx);
      if (o == "plus")
        h.orientation = Orientation::Plus;
      else if (o == "minus")
        h.orientation = Orientation::Minus;
      else
        parse_fail(ctx + ": orientation must be \"plus\" or \"minus\"");
      c.families.push_back(std::move(h));
    }
  }

  if (doc.contains("gluing")) {
    const json& g = doc.at("gluing");
    if (!g.is_array()) parse_fail("gluing must be a list");
    for (const auto& pair : g) {
      if (pair.is_array() && pair.size() == 2) {
        c.gluing.push_back({side_ref(pair[0], "gluing"), side_ref(pair[1], "gluing")});
      } else if (pair.is_array() && pair.size() == 6) {
        c.gluing.push_back({side_ref(json::array({pair[0], pair[1], pair[2]}), "gluing"),
                            side_ref(json::array({pair[3], pair[4], pair[5]}), "gluing")});
      } else {
        parse_fail("gluing entries must be [[sheet, slit, side], [sheet, slit, side]]");
      }
    }
  }

  const json& rams = field(doc, "rams", "document");
  if (!rams.is_object()) parse_fail("rams must be an object");
  for (const auto& [id, r] : rams.items()) {
    std::string ctx = "ram " + id;
    RamPoint rp{id, point(field(r, "projection", ctx), ctx), std::nullopt};
    const json& ord = field(r, "order", ctx);
    if (ord.is_string()) {
      if (ord.get<std::string>() != "inf") parse_fail(ctx + ": order must be an integer or \"inf\"");
    } else if (ord.is_number_integer()) {
      rp.order = ord.get<int>();
    } else {
      parse_fail(ctx + ": order must be an integer or \"inf\"");
    }
    c.rams[id] = std::move(rp);
  }

  detail::SurfaceIndex check(c);  // referential integrity
  return c;
}

SheetComplex build_from_spec_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  return build_from_spec(doc);
}

json to_spec(const SheetComplex& c) {
  json doc;
  doc["z0"] = point_json(c.z0);
  json protos = json::object();
  for (const auto& [id, p] : c.protos) {
    json slits = json::array();
    for (const auto& s : p.slits) slits.push_back({{"id", s.id}, {"foot", point_json(s.foot)}, {"ram", s.ram}});
    protos[id] = std::move(slits);
  }
  doc["protos"] = std::move(protos);
  json sheets = json::object();
  for (const auto& [id, proto] : c.core_sheets) sheets[id] = proto;
  doc["core_sheets"] = std::move(sheets);
  json fams = json::array();
  for (const auto& f : c.families)
    fams.push_back({{"id", f.id},
                    {"proto", f.proto},
                    {"ram", f.ram},
                    {"chain_slit", f.chain_slit},
                    {"attach", {{"sheet", f.attach.sheet}, {"slit", f.attach.slit}, {"side", to_string(f.attach.side)}}},
                    {"orientation", to_string(f.orientation)}});
  doc["families"] = std::move(fams);
  json glue = json::array();
  for (const auto& [a, b] : c.gluing) glue.push_back(json::array({side_json(a), side_json(b)}));
  doc["gluing"] = std::move(glue);
  json rams = json::object();
  for (const auto& [id, r] : c.rams) {
    json o = r.order ? json(*r.order) : json("inf");
    rams[id] = {{"projection", point_json(r.projection)}, {"order", o}};
  }
  doc["rams"] = std::move(rams);
  return doc;
}

SheetComplex load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SurfaceError("io-error", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return build_from_spec_text(ss.str());
}

}  // namespace lrs
