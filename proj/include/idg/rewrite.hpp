#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idg/diagnostic.hpp"
#include "idg/graph.hpp"

namespace idg {

/// One inlining step: the binding inlined and every (original, copy) id
/// pair created while doing it, in creation order.
struct TraceEntry {
  Id let;
  std::vector<std::pair<Id, Id>> fresh;
};

struct RewriteResult {
  TermGraph term;
  Correspondence external;
  std::vector<TraceEntry> trace;
};

enum class Strategy { outermost_first, innermost_first, id_order };

const char* to_string(Strategy s);
/// Accepts "outermost-first", "innermost-first", "id-order".
std::optional<Strategy> parse_strategy(const std::string& text);

/// Replaces node `node` by a fresh copy of the contents of box `body`; both
/// must correspond to `iface` (an interface of the internal types) in the
/// fragment of `let`. Resource ports are spliced away; each constructor
/// port pair becomes a fresh let-binding. The body itself is left in place.
RewriteResult substitute(const TermGraph& t, const Correspondence& c, const Id& let, const Id& body, const Id& node);

/// Substitutes the body of `let` for every occurrence, then deletes the
/// binding, its ports, its body and its interface. Throws UsageError if
/// `let` is unknown, its body or occurrences are not covered by its
/// fragment, or an occurrence lies inside the body.
RewriteResult inline_let(const TermGraph& t, const Correspondence& c, const Id& let);

/// Raised by reduce_step when the result of a step no longer checks.
class ReductionCheckFailed : public std::runtime_error {
 public:
  ReductionCheckFailed(RewriteResult r, Diagnostics d);
  RewriteResult result;
  Diagnostics diagnostics;
};

/// inline_let followed by the full bundle check against `type`.
RewriteResult reduce_step(const TypeGraph& type, const TermGraph& t, const Correspondence& c, const Id& let);

/// Let-bindings of `t`, sorted by id.
std::vector<Id> list_redexes(const TermGraph& t);

/// The binding the strategy picks next, if any.
std::optional<Id> choose_redex(const TermGraph& t, Strategy s);

class StepLimitExceeded : public std::runtime_error {
 public:
  explicit StepLimitExceeded(RewriteResult partial);
  RewriteResult partial;
};

/// IDG_MAX_STEPS from the environment, else 10000.
std::size_t default_max_steps();

/// Inlines until no let-binding is left.
RewriteResult normalize(const TermGraph& t, const Correspondence& c, Strategy s = Strategy::outermost_first,
                        std::size_t max_steps = default_max_steps());

}  // namespace idg
