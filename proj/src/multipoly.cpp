#include "youngbook/multipoly.hpp"

#include <json.hpp>

#include <numeric>

namespace youngbook {

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const
{
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    return b < a;
}

MultiPoly::MultiPoly(std::size_t variable_count, int first_index) : vars_(variable_count), first_(first_index) {}

MultiPoly MultiPoly::constant(std::size_t variable_count, int first_index, const ExactRational& value)
{
    MultiPoly p(variable_count, first_index);
    ExactRational c = value;
    c.canonicalize();
    p.add_term(Exponents(variable_count, 0), c);
    return p;
}

MultiPoly MultiPoly::variable_sum(std::size_t variable_count, int first_index, std::size_t begin, std::size_t end)
{
    if (end > variable_count || begin > end) {
        throw ArgumentError("variable range outside the polynomial ring");
    }
    MultiPoly p(variable_count, first_index);
    for (std::size_t v = begin; v < end; ++v) {
        Exponents e(variable_count, 0);
        e[v] = 1;
        p.add_term(e, 1);
    }
    return p;
}

MultiPoly MultiPoly::monomial(int first_index, Exponents exponents, const ExactRational& coeff)
{
    MultiPoly p(exponents.size(), first_index);
    ExactRational c = coeff;
    c.canonicalize();
    p.add_term(exponents, c);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const ExactRational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& other) const
{
    if (vars_ != other.vars_ || first_ != other.first_) {
        throw ArgumentError("polynomials live in different variable sets");
    }
}

ExactRational MultiPoly::coefficient(const Exponents& exponents) const
{
    if (exponents.size() != vars_) {
        throw ArgumentError("exponent vector has " + std::to_string(exponents.size()) + " entries, expected " +
                            std::to_string(vars_));
    }
    auto it = terms_.find(exponents);
    return it == terms_.end() ? ExactRational(0) : it->second;
}

int MultiPoly::total_degree() const
{
    if (terms_.empty()) return -1;
    const Exponents& top = terms_.begin()->first;
    return std::accumulate(top.begin(), top.end(), 0);
}

bool MultiPoly::is_homogeneous() const
{
    if (terms_.empty()) return true;
    int degree = total_degree();
    const Exponents& last = terms_.rbegin()->first;
    return std::accumulate(last.begin(), last.end(), 0) == degree;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other)
{
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other)
{
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.check_compatible(b);
    MultiPoly out(a.vars_, a.first_);
    Exponents e(a.vars_, 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < a.vars_; ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other)
{
    *this = *this * other;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const ExactRational& factor)
{
    ExactRational f = factor;
    f.canonicalize();
    if (f == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= f;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned exponent) const
{
    MultiPoly result = constant(vars_, first_, 1);
    MultiPoly base = *this;
    while (exponent) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent) base *= base;
    }
    return result;
}

std::string MultiPoly::to_text() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first_term = true;
    for (const auto& [e, c] : terms_) {
        if (!first_term) out += " + ";
        first_term = false;
        out += c.get_str();
        std::string mono;
        for (std::size_t v = 0; v < vars_; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += "t" + std::to_string(first_ + static_cast<int>(v));
            if (e[v] != 1) mono += "^" + std::to_string(e[v]);
        }
        if (!mono.empty()) out += " * " + mono;
    }
    return out;
}

std::string MultiPoly::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        terms.push_back({{"exponents", e}, {"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}});
    }
    return terms.dump();
}

}  // namespace youngbook
