#include "idg/check.hpp"

#include "idg/correspondence.hpp"
#include "idg/validate.hpp"
#include "idg/wellformed.hpp"

namespace idg {

Diagnostics check_bundle(const Bundle& b, std::size_t cycle_steps) {
  Diagnostics d = validate_type_fragment(b.type);
  if (!d.empty()) return d;
  d = validate_term_fragment(b.term);
  if (!d.empty()) return d;
  if (!is_type(b.type)) return {{rule::kNotType, {}, "type needs exactly one root interface"}};
  if (!is_term(b.term)) return {{rule::kNotTerm, {}, "term needs exactly one root box"}};
  d = check_correspondence(b.external, b.term, b.type);
  if (!d.empty()) return d;
  d = check_let_correspondences(b.term);
  if (!d.empty()) return d;
  d = check_external(b.external, b.term, b.type);
  if (!d.empty()) return d;
  d = check_total_coverage(b.external, b.term, &b.type);
  if (!d.empty()) return d;
  return check_well_formed(b.type, b.term, b.external, cycle_steps);
}

}  // namespace idg
