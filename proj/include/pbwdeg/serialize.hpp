#pragma once

// JSON forms of the result types. Field order is fixed so repeated runs give
// byte-identical output.

#include <json.hpp>

#include "pbwdeg/cartan.hpp"
#include "pbwdeg/fflv.hpp"
#include "pbwdeg/plucker.hpp"
#include "pbwdeg/profile.hpp"

namespace pbwdeg {

using Json = nlohmann::ordered_json;

/// {"total": N, "by_grade": {m: dim}, "by_grade_weight": [[m, [e...], dim], ...]}
Json to_json(const GradedProfile& p);
GradedProfile profile_from_json(const Json& j);

/// {"d_dim":, "e_dim":, "kernel_total":, "kernel_cells": [[m, [e...], dim], ...]}
Json to_json(const KernelReport& r);
KernelReport kernel_from_json(const Json& j);

/// [[{"root":[i,j],"exp":e}, ...], ...]
Json to_json(const LatticeSet& s);
Json to_json(const ExponentVector& m);

Json to_json(const QCertificate& c);

}  // namespace pbwdeg
