#include "agwb/properties.hpp"

#include "agwb/errors.hpp"

namespace agwb {

  LawCheck<3> is_left_invertive(CayleyTable const& t) {
    Element const n = static_cast<Element>(t.order());
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element const ab = t(a, b);
        for (Element c = 0; c < n; ++c) {
          if (t(ab, c) != t(t(c, b), a)) {
            return {false, std::array<Element, 3>{a, b, c}};
          }
        }
      }
    }
    return {};
  }

  LawCheck<4> is_medial(CayleyTable const& t) {
    Element const n = static_cast<Element>(t.order());
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          Element const ab = t(a, b);
          Element const ac = t(a, c);
          for (Element d = 0; d < n; ++d) {
            if (t(ab, t(c, d)) != t(ac, t(b, d))) {
              return {false, std::array<Element, 4>{a, b, c, d}};
            }
          }
        }
      }
    }
    return {};
  }

  LawCheck<3> is_associative(CayleyTable const& t) {
    Element const n = static_cast<Element>(t.order());
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (t(t(a, b), c) != t(a, t(b, c))) {
            return {false, std::array<Element, 3>{a, b, c}};
          }
        }
      }
    }
    return {};
  }

  LawCheck<2> is_commutative(CayleyTable const& t) {
    Element const n = static_cast<Element>(t.order());
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (t(a, b) != t(b, a)) {
          return {false, std::array<Element, 2>{a, b}};
        }
      }
    }
    return {};
  }

  ElementSet left_identities(CayleyTable const& t) {
    Element const n = static_cast<Element>(t.order());
    ElementSet    out(n);
    for (Element e = 0; e < n; ++e) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) {
        ok = t(e, x) == x;
      }
      if (ok) {
        out.insert(e);
      }
    }
    return out;
  }

  ElementSet right_identities(CayleyTable const& t) {
    Element const n = static_cast<Element>(t.order());
    ElementSet    out(n);
    for (Element e = 0; e < n; ++e) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) {
        ok = t(x, e) == x;
      }
      if (ok) {
        out.insert(e);
      }
    }
    return out;
  }

  RegularityCheck is_regular(CayleyTable const& t) {
    Element const   n = static_cast<Element>(t.order());
    RegularityCheck out;
    out.witnesses.reserve(n);
    for (Element a = 0; a < n; ++a) {
      bool found = false;
      for (Element x = 0; x < n; ++x) {
        if (t(t(a, x), a) == a) {
          out.witnesses.push_back(x);
          found = true;
          break;
        }
      }
      if (!found) {
        out.holds = false;
        out.witnesses.clear();
        out.witnessless = a;
        return out;
      }
    }
    return out;
  }

  bool is_inverse_la(CayleyTable const& t) {
    Element const n = static_cast<Element>(t.order());
    for (Element a = 0; a < n; ++a) {
      bool found = false;
      for (Element x = 0; x < n && !found; ++x) {
        found = t(t(a, x), a) == a && t(t(x, a), x) == x;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  ElementSet right_inverses(CayleyTable const& t, Element a) {
    if (a >= t.order()) {
      throw UsageError("element " + std::to_string(a) + " out of range");
    }
    auto ids = left_identities(t);
    if (ids.empty()) {
      throw DomainError("right inverses need a left identity");
    }
    Element const e = ids.front();
    Element const n = static_cast<Element>(t.order());
    ElementSet    out(n);
    for (Element x = 0; x < n; ++x) {
      if (t(a, x) == e) {
        out.insert(x);
      }
    }
    return out;
  }

  bool is_right_invertible(CayleyTable const& t) {
    auto ids = left_identities(t);
    if (ids.empty()) {
      return false;
    }
    Element const e = ids.front();
    Element const n = static_cast<Element>(t.order());
    for (Element a = 0; a < n; ++a) {
      bool found = false;
      for (Element x = 0; x < n && !found; ++x) {
        found = t(a, x) == e;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  ElementSet idempotents(CayleyTable const& t) {
    Element const n = static_cast<Element>(t.order());
    ElementSet    out(n);
    for (Element x = 0; x < n; ++x) {
      if (t(x, x) == x) {
        out.insert(x);
      }
    }
    return out;
  }

  bool is_globally_idempotent(CayleyTable const& t) {
    Element const n = static_cast<Element>(t.order());
    ElementSet    square(n);
    for (auto x : t.entries()) {
      square.insert(x);
    }
    return square.is_full();
  }

  PropertyProfile profile(CayleyTable const& t) {
    PropertyProfile p;
    p.is_la = is_left_invertive(t).holds;
    p.is_medial = is_medial(t).holds;
    if (auto l = left_identities(t); !l.empty()) {
      p.left_identity = l.front();
    }
    if (auto r = right_identities(t); !r.empty()) {
      p.right_identity = r.front();
    }
    p.is_commutative = is_commutative(t).holds;
    p.is_associative = is_associative(t).holds;
    p.is_regular = is_regular(t).holds;
    p.is_inverse_la = is_inverse_la(t);
    p.is_right_invertible = is_right_invertible(t);
    p.is_globally_idempotent = is_globally_idempotent(t);
    return p;
  }

}  // namespace agwb
