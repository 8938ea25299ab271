#pragma once

#include <json.hpp>

#include "conway/bqf.hpp"
#include "conway/classgroup.hpp"
#include "conway/diform.hpp"
#include "conway/hermitian.hpp"
#include "conway/reduction.hpp"
#include "conway/render.hpp"
#include "conway/topograph.hpp"

namespace conway {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json to_json(const Vec2& v);
Json to_json(const BQF& q);
Json to_json(const Mat2& m);  // integer entries, or [x, y] pairs over a quadratic ring
Json to_json(const Superbase& s);
Json to_json(const Divector& d);
Json to_json(const RingElement& z);  // [x, y]

Json well_json(const Well& w);
Json river_json(const RiverPeriod& r);
Json minimum_json(const MinimumReport& m);
Json pell_json(const BigInt& d, const PellSolution& s);
Json classgroup_json(const ClassGroupTable& t);
Json diwell_json(const DiWell& w);
Json diriver_json(const DiRiver& r);
Json cube_json(const CubeValues& c);
Json superbase_ball_json(const SuperbaseBall& b);
Json coxeter_json(const CoxeterReport& c, const TransitivityReport& t);
Json patch_json(const LayoutPatch& p);

// Output schema of a CLI command; the whole map when command is empty.
Json command_schema(const std::string& command);

}  // namespace conway
