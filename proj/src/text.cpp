#include "ga/text.hpp"

#include <charconv>
#include <cctype>
#include <string>
#include <system_error>

#include "ga/error.hpp"

namespace ga {

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_blade_name(BasisBlade b, const Signature &sig) {
  std::string out = "e";
  const bool separated = sig.n() >= 10;
  bool first = true;
  for (int i : b.indices()) {
    if (separated && !first)
      out += '_';
    out += std::to_string(i);
    first = false;
  }
  return out;
}

std::string format(const Multivector &a) {
  if (a.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &t : a.terms()) {
    double c = t.coeff;
    if (!first) {
      out += c < 0 ? " - " : " + ";
      c = std::abs(c);
    }
    out += format_number(c);
    if (t.blade.bits != 0) {
      out += '*';
      out += format_blade_name(t.blade, a.algebra());
    }
    first = false;
  }
  return out;
}

std::vector<int> parse_blade_indices(std::string_view suffix,
                                     const Signature &sig) {
  std::vector<int> out;
  auto check = [&](int idx) {
    if (idx < 1 || idx > sig.n())
      throw Error(Errc::unknown_basis_index,
                  "basis index " + std::to_string(idx) +
                      " is outside 1.." + std::to_string(sig.n()));
    out.push_back(idx);
  };
  auto read_number = [&](std::string_view digits) {
    if (digits.empty())
      throw Error(Errc::syntax_error, "empty basis index");
    int value = 0;
    const auto res =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (res.ec != std::errc() || res.ptr != digits.data() + digits.size())
      throw Error(Errc::unknown_basis_index,
                  "bad basis index '" + std::string(digits) + "'");
    check(value);
  };

  if (suffix.find('_') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t us = suffix.find('_', start);
      read_number(suffix.substr(start, us - start));
      if (us == std::string_view::npos)
        break;
      start = us + 1;
    }
  } else if (sig.n() >= 10) {
    read_number(suffix);
  } else {
    for (char ch : suffix) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error(Errc::syntax_error, "bad blade name suffix");
      check(ch - '0');
    }
  }
  return out;
}

namespace {

class CanonicalReader {
public:
  CanonicalReader(std::string_view text, const Signature &sig)
      : text_(text), sig_(sig) {}

  Multivector read() {
    std::vector<Multivector::Term> terms;
    skip_space();
    double sign = 1.0;
    if (peek() == '-') {
      ++pos_;
      sign = -1.0;
    }
    terms.push_back(term(sign));
    skip_space();
    while (pos_ < text_.size()) {
      const char op = text_[pos_];
      if (op != '+' && op != '-')
        fail("expected ' + ' or ' - '");
      ++pos_;
      skip_space();
      terms.push_back(term(op == '-' ? -1.0 : 1.0));
      skip_space();
    }
    return Multivector(sig_, std::move(terms));
  }

private:
  Multivector::Term term(double sign) {
    const double c = number();
    if (peek() != '*')
      return {BasisBlade{}, sign * c};
    ++pos_;
    if (peek() != 'e')
      fail("expected basis blade after '*'");
    ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    const auto indices =
        parse_blade_indices(text_.substr(start, pos_ - start), sig_);
    BasisBlade b;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i > 0 && indices[i] <= indices[i - 1])
        fail("blade indices must be strictly ascending");
      b.bits |= 1u << (indices[i] - 1);
    }
    return {b, sign * c};
  }

  double number() {
    double value = 0.0;
    const char *begin = text_.data() + pos_;
    const auto res = std::from_chars(begin, text_.data() + text_.size(), value);
    if (res.ec != std::errc())
      fail("expected a number");
    pos_ += static_cast<std::size_t>(res.ptr - begin);
    return value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ')
      ++pos_;
  }
  [[noreturn]] void fail(const std::string &msg) const {
    throw Error(Errc::syntax_error,
                msg + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  const Signature &sig_;
  std::size_t pos_ = 0;
};

} // namespace

Multivector parse_multivector(std::string_view text, const Signature &sig) {
  return CanonicalReader(text, sig).read();
}

Signature parse_algebra_spec(std::string_view text, double tolerance) {
  const std::size_t comma = text.find(',');
  if (comma == std::string_view::npos)
    throw Error(Errc::syntax_error, "algebra spec must look like \"p,q\"");
  auto read = [&](std::string_view part) {
    int value = 0;
    const auto res =
        std::from_chars(part.data(), part.data() + part.size(), value);
    if (res.ec != std::errc() || res.ptr != part.data() + part.size())
      throw Error(Errc::syntax_error,
                  "bad count '" + std::string(part) + "' in algebra spec");
    return value;
  };
  return make_algebra(read(text.substr(0, comma)), read(text.substr(comma + 1)),
                      tolerance);
}

} // namespace ga
