#include "gtl/laurent.hpp"

#include <sstream>

namespace gtl {

void Laurent::put(int exp, Int c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::term(Int c, int exp) {
  Laurent p;
  p.put(exp, std::move(c));
  return p;
}

Laurent Laurent::qc() {
  Laurent p;
  p.put(1, 1);
  p.put(-1, 1);
  return p;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

Int Laurent::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

Laurent Laurent::operator-() const {
  Laurent p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) put(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) put(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.put(ea + eb, ca * cb);
  return p;
}

Laurent Laurent::bar() const {
  Laurent p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

Laurent Laurent::shifted(int k) const {
  Laurent p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
  return p;
}

Laurent Laurent::neg_part() const {
  Laurent p;
  for (const auto& [e, c] : terms_) {
    if (e >= 0) break;
    p.terms_.emplace(e, c);
  }
  return p;
}

bool Laurent::in(Subring r) const {
  for (const auto& [e, c] : terms_) {
    switch (r) {
      case Subring::AMinus:
        if (e > 0) return false;
        break;
      case Subring::APlus:
        if (e < 0) return false;
        break;
      case Subring::ZOfQ:
        if (e < 0 || e % 2 != 0) return false;
        break;
      case Subring::NOfVVinv:
        if (c < 0) return false;
        break;
      case Subring::VinvAMinus:
        if (e > -1) return false;
        break;
    }
  }
  return true;
}

namespace {

std::string render(const std::map<int, Int>& terms, bool tex) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << "v";
      if (e != 1) {
        if (tex)
          os << "^{" << e << "}";
        else
          os << "^" << e;
      }
    }
  }
  return os.str();
}

}  // namespace

std::string Laurent::str() const { return render(terms_, false); }

std::string Laurent::latex() const { return render(terms_, true); }

}  // namespace gtl
