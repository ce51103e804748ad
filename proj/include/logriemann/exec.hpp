#pragma once

namespace lrs {

/// Parallel runs use OpenMP and give results identical to Serial runs.
enum class ExecPolicy { Serial, Parallel };

}  // namespace lrs
