#pragma once

#include "ptg/graph.hpp"
#include "ptg/labeling.hpp"
#include "ptg/reps.hpp"

#include <optional>
#include <span>

namespace ptg {

/// Central representation -> equal-length max-tolerance representation with
/// T_u = [c_u, c_u + h0/2], t_u = (h0 - h_u)/2 and h0 = max length + 1.
Representation cmptg_to_umtg(const Representation& rep);

/// Equal-length max-tolerance representation -> central one with
/// I_u = [l_u - (h - t_u), l_u + (h - t_u)]. Requires every t_u < h.
Representation umtg_to_cmptg(const Representation& rep);

/// First pair (i, j) where interval i properly contains interval j.
std::optional<Edge> find_proper_containment(const Representation& rep);

/// Containment-free central representation -> one where every interval has
/// the leftmost interval's length, keeping the left-endpoint order.
Representation pcmptg_to_ucmptg(const Representation& rep);

/// Proper interval graph -> central representation with integer centers and
/// one common radius.
Representation proper_to_ucmptg(const Graph& g);

/// Containment-free central representation -> the same intervals with
/// tolerance half their length.
Representation pcmptg_to_50mtg(const Representation& rep);

/// Labels along an ordering satisfying the four-point condition and the two
/// gap conditions -> intervals [x_i - r_i, x_i + r_i].
Representation labeled_to_cmptg(const LabeledGraph& lg);

/// Optimized labeling -> central catch representation with points f(v).
Representation optimized_to_cicd(const Digraph& d, const Labeling& f);

/// Centers of a central catch representation, shifted to be positive.
Labeling cicd_to_labeling(const Representation& rep);

Digraph rep_to_icd_digraph(std::span<const PointedInterval> items);
Digraph rep_to_icd_digraph(const Representation& rep);

}  // namespace ptg
