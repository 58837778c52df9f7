#pragma once

#include "jacpair/hypothesis.hpp"
#include "jacpair/magnus.hpp"
#include "jacpair/square.hpp"

#include <nlohmann/json.hpp>

namespace jacpair {

// All reports use ordered JSON and fully deterministic field order so the
// byte output is stable for identical inputs; every document carries
// "schema": 1. Rational coordinates appear as [num, den] pairs.
using Json = nlohmann::ordered_json;

Json json_point(const QPoint& p);
Json json_polygon(const NewtonPolygon& n);
Json json_wdecomp(const WDecomp& d);
Json json_hypotheses(const PairHypotheses& h);
Json json_magnus(const MagnusCoeffs& c);
Json json_magnus_report(const MagnusReport& r);
Json json_square(const SquareCompletion& s);
Json json_verdict(const PipelineVerdict& v);
Json json_broken_line(const BrokenLine& t);

} // namespace jacpair
