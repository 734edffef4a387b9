#include "derivspace/serialize.hpp"

#include "derivspace/error.hpp"

namespace derivspace {

using nlohmann::json;

json to_json(const ExactMatrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Subspace& s)
{
    return json{{"n", s.vars()},
                {"e", s.degree()},
                {"order", kMonomialOrder},
                {"dim", s.dim()},
                {"basis", to_json(s.basis())}};
}

Subspace subspace_from_json(const json& j)
{
    try {
        const int n = j.at("n").get<int>();
        const int e = j.at("e").get<int>();
        if (j.contains("order") && j.at("order").get<std::string>() != kMonomialOrder) {
            throw DomainError(ErrorKind::FormatError,
                              "unsupported monomial order '" + j.at("order").get<std::string>() + "'");
        }
        ExactMatrix basis(0, graded_dim(n, e));
        for (const auto& row : j.at("basis")) {
            std::vector<Rational> values;
            for (const auto& entry : row) values.push_back(parse_rational(entry.get<std::string>()));
            basis.append_row(values);
        }
        return Subspace(n, e, std::move(basis));
    } catch (const json::exception& ex) {
        throw DomainError(ErrorKind::FormatError, std::string("subspace JSON: ") + ex.what());
    }
}

json to_json(const Catalecticant& c)
{
    return json{{"n", c.n},
                {"d", c.d},
                {"k", c.k},
                {"rows", c.matrix.rows()},
                {"cols", c.matrix.cols()},
                {"order", kMonomialOrder},
                {"rank", rank(c.matrix)},
                {"entries", to_json(c.matrix)}};
}

json to_json(const ReconstructionResult& r)
{
    json basis = json::array();
    for (const auto& h : r.basis) basis.push_back(print_poly(h));
    return json{{"n", r.n},
                {"d", r.d},
                {"k", r.k},
                {"solution_dim", r.solution_dim},
                {"verdict", verdict_name(r.verdict)},
                {"basis", std::move(basis)}};
}

json to_json(const RelationMatrix& a)
{
    json index = json::array();
    for (const auto& i : a.indices()) index.push_back(i.to_string());
    return json{{"n", a.vars()}, {"k", a.order()}, {"index", std::move(index)},
                {"a", to_json(a.coefficients())}};
}

json to_json(const SymmetryReport& s)
{
    json violations = json::array();
    for (const auto& v : s.violations) {
        violations.push_back(
            json{{"I", v.row.to_string()}, {"I'", v.col.to_string()}, {"p", v.p}, {"q", v.q}});
    }
    return json{{"ok", s.ok}, {"violations", std::move(violations)}};
}

json to_json(const TheoremReport& t)
{
    json out{{"n", t.n},
             {"d", t.d},
             {"k", t.k},
             {"within_bound", t.within_bound},
             {"hypothesis", t.hypothesis},
             {"chain_dims", t.chain_dims},
             {"chain_full", t.chain_full},
             {"chain_ok", t.chain_ok},
             {"solution_dim", t.result.solution_dim},
             {"verdict", verdict_name(t.result.verdict)},
             {"contradiction", t.contradiction},
             {"result", to_json(t.result)}};
    out["witness"] = t.witness ? json(to_string(*t.witness)) : json(nullptr);
    return out;
}

} // namespace derivspace
