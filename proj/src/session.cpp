#include "ga/session.hpp"

#include <cctype>

#include "ga/text.hpp"

namespace ga {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view name) {
  if (name.empty() ||
      !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    return false;
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
      return false;
  return true;
}

Outcome failure(int status, const std::string &msg) {
  return {"error: " + msg, status, false};
}

int status_for(const Error &err) {
  return err.code() == Errc::syntax_error ||
                 err.code() == Errc::unknown_basis_index
             ? 1
             : 2;
}

} // namespace

Outcome Session::execute(std::string_view line) {
  line = trim(line);
  if (line.empty() || line.front() == '#')
    return {};
  if (line.front() == ':') {
    const auto space = line.find_first_of(" \t");
    const std::string_view cmd = line.substr(0, space);
    const std::string_view rest =
        space == std::string_view::npos ? std::string_view{} : line.substr(space);
    if (cmd == ":quit")
      return {"", 0, true};
    if (cmd == ":let")
      return let(trim(rest));
    if (cmd == ":algebra")
      return switch_algebra(trim(rest));
    return failure(1, "unknown command '" + std::string(cmd) + "'");
  }
  try {
    const expr::Expression e = expr::parse(line, sig_);
    return {format(expr::evaluate(e, env_, sig_)), 0, false};
  } catch (const Error &err) {
    return failure(status_for(err), err.what());
  }
}

Outcome Session::let(std::string_view rest) {
  const auto eq = rest.find('=');
  if (eq == std::string_view::npos)
    return failure(1, "expected ':let name = expr'");
  const std::string name(trim(rest.substr(0, eq)));
  if (!valid_name(name))
    return failure(1, "invalid name '" + name + "'");
  if (expr::is_reserved_name(name))
    return failure(1, "'" + name + "' is reserved");
  try {
    const expr::Expression e = expr::parse(rest.substr(eq + 1), sig_);
    Multivector value = expr::evaluate(e, env_, sig_);
    std::string shown = name + " = " + format(value);
    env_.insert_or_assign(name, std::move(value));
    return {std::move(shown), 0, false};
  } catch (const Error &err) {
    return failure(status_for(err), err.what());
  }
}

Outcome Session::switch_algebra(std::string_view rest) {
  try {
    sig_ = parse_algebra_spec(rest, sig_.tolerance());
  } catch (const Error &err) {
    return failure(1, err.what());
  }
  env_.clear();
  return {"algebra " + std::to_string(sig_.p()) + "," +
              std::to_string(sig_.q()),
          0, false};
}

} // namespace ga
