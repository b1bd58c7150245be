#pragma once
#include <string>
#include <string_view>

#include "ga/expr.hpp"

namespace ga {

// One REPL / script line's result. status: 0 ok, 1 parse error,
// 2 evaluation error.
struct Outcome {
  std::string output; // empty for blank lines and comments
  int status = 0;
  bool quit = false;
};

// Line interpreter behind ga-calc. Understands
//   :algebra p,q      switch algebra (clears all bindings)
//   :let name = expr  bind a name
//   :quit
//   expr              print the value
// Blank lines and lines starting with '#' are ignored.
class Session {
public:
  explicit Session(Signature sig) : sig_(sig) {}

  Outcome execute(std::string_view line);

  const Signature &algebra() const noexcept { return sig_; }
  const expr::Environment &environment() const noexcept { return env_; }

private:
  Outcome let(std::string_view rest);
  Outcome switch_algebra(std::string_view rest);

  Signature sig_;
  expr::Environment env_;
};

} // namespace ga
