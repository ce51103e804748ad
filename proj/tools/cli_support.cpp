#include "cli_support.hpp"

#include <unistd.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

namespace lrs::cli {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t p = s.find(sep, start);
    out.push_back(strip(s.substr(start, p == std::string::npos ? std::string::npos : p - start)));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

double parse_real(const std::string& s) {
  std::string t = strip(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  double v = 0.0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size() || !std::isfinite(v))
    throw SurfaceError("usage", "not a finite number: '" + s + "'");
  return v;
}

}  // namespace

Complex parse_complex(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 2) throw SurfaceError("usage", "expected re,im but got '" + s + "'");
  return {parse_real(parts[0]), parse_real(parts[1])};
}

std::vector<Complex> parse_complex_list(const std::string& s) {
  std::vector<Complex> out;
  for (const auto& p : split(s, ';'))
    if (!p.empty()) out.push_back(parse_complex(p));
  return out;
}

Complex parse_coefficient(const std::string& raw) {
  std::string s = strip(raw);
  if (s.empty()) throw SurfaceError("usage", "empty coefficient");
  if (s.back() != 'i') return parse_real(s);
  s.pop_back();
  size_t cut = std::string::npos;
  for (size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      cut = i;
      break;
    }
  auto imag = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (cut == std::string::npos) return {0.0, imag(s)};
  return {parse_real(s.substr(0, cut)), imag(s.substr(cut))};
}

LaurentPoly parse_laurent(const std::string& s) {
  size_t colon = s.find(':');
  if (colon == std::string::npos) throw SurfaceError("usage", "Laurent polynomial must look like k:c0,c1,...");
  LaurentPoly q;
  double k = parse_real(s.substr(0, colon));
  if (k != std::floor(k) || std::abs(k) > 1e6) throw SurfaceError("usage", "base exponent must be an integer");
  q.low = static_cast<int>(k);
  for (const auto& c : split(s.substr(colon + 1), ',')) q.coeffs.push_back(parse_coefficient(c));
  return q;
}

Polynomial parse_polynomial(const std::string& s) {
  Polynomial p;
  for (const auto& c : split(s, ',')) p.coeffs.push_back(parse_coefficient(c));
  return p;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  for (const auto& p : split(s, ';')) {
    long v = 0;
    auto [q, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
    if (p.empty() || ec != std::errc() || q != p.data() + p.size())
      throw SurfaceError("usage", "not an integer: '" + p + "'");
    out.push_back(v);
  }
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw std::runtime_error("cannot write " + tmp.string());
    o << content;
    o.close();
    if (!o) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename into " + path + ": " + ec.message());
  }
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    write_atomic(path, content);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json validation_json(const ValidationReport& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : r.violations) v.push_back({{"invariant", x.invariant}, {"detail", x.detail}});
  return {{"ok", r.ok}, {"violations", v}};
}

nlohmann::json census_json(const std::vector<CensusEntry>& census) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : census)
    out.push_back({{"ram", e.ram}, {"order", e.order ? nlohmann::json(*e.order) : nlohmann::json("inf")}});
  return out;
}

nlohmann::json ends_json(const EndsReport& r) {
  nlohmann::json ends = nlohmann::json::array();
  for (const auto& e : r.ends) {
    if (const auto* f = std::get_if<FiniteCoverEnd>(&e.kind)) {
      ends.push_back({{"kind", "finite_cover"}, {"degree", f->degree}, {"sheet", e.sheet}});
    } else {
      const auto& c = std::get<CycleEnd>(e.kind);
      ends.push_back({{"kind", "cycle"},
                      {"cycle", c.cycle},
                      {"a", c.a},
                      {"a_prime", c.a_prime},
                      {"index", c.index},
                      {"sheet", e.sheet}});
    }
  }
  nlohmann::json u = nlohmann::json::object();
  for (const auto& [w, uw] : r.u) u[w] = uw;
  nlohmann::json cycles = nlohmann::json::array();
  std::set<std::string> seen;
  for (const auto& [w, uw] : r.u) {
    if (seen.count(w)) continue;
    nlohmann::json cyc = nlohmann::json::array();
    for (std::string x = w; !seen.count(x); x = r.u.at(x)) {
      seen.insert(x);
      cyc.push_back(x);
    }
    cycles.push_back(cyc);
  }
  const auto& d = r.decomposition;
  return {{"radius", r.radius},
          {"ends", ends},
          {"u", u},
          {"u_cycles", cycles},
          {"normalization", {{"N", d.N}, {"c1", d.c1}, {"c2", d.c2}, {"extension", d.extension}}}};
}

nlohmann::json witness_json(const std::vector<std::string>& cycle, const EmbeddingWitness& w) {
  nlohmann::json wl = nlohmann::json::array();
  for (auto z : w.target.w_list) wl.push_back(complex_json(z));
  return {{"cycle", cycle},
          {"k0", w.k0},
          {"k", w.k},
          {"k_prime", w.k_prime},
          {"target", {{"z0", complex_json(w.target.z0)}, {"w_list", wl}, {"w", complex_json(w.target.w)}, {"K", w.target.K}}}};
}

nlohmann::json topology_json(const std::vector<ComponentTopology>& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : t)
    out.push_back({{"sheets", c.sheets}, {"b1_completed", c.b1}, {"genus", c.genus}, {"punctures", c.punctures}});
  return out;
}

nlohmann::json probe_json(const ProbeReport& r, double cluster_tol) {
  nlohmann::json cl = nlohmann::json::array();
  for (const auto& c : r.clusters)
    cl.push_back({{"location", complex_json(c.location)}, {"rays", c.rays}, {"diameter", c.diameter}});
  return {{"rays", r.rays}, {"cluster_tol", cluster_tol}, {"clusters", cl}, {"unclustered", r.unclustered}};
}

}  // namespace lrs::cli
