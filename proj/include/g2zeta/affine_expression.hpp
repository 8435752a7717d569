#ifndef G2ZETA_AFFINE_EXPRESSION_HPP
#define G2ZETA_AFFINE_EXPRESSION_HPP

#include <cctype>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <g2zeta/rational.hpp>

namespace g2zeta
{

// Affine combination  c0 + sum_i c_i * name_i  with rational coefficients.
//
// The transcribed tables (generating-function blocks, relation coefficient
// blocks) are written as strings such as "2p+2q-1-2k-sigma" or "t1/2-3t4/2+t5"
// so that they can be compared line by line with the printed formulas.
//
// Grammar (whitespace ignored):
//   expr := ['+'|'-'] term (('+'|'-') term)*
//   term := [integer] ['*'] [name] ['/' integer]
//   name := letter (letter | digit)*
class AffineExpression
{
public:
    AffineExpression() = default;

    static AffineExpression parse(std::string_view text)
    {
        AffineExpression out;
        std::string s;
        for (char ch : text) {
            if (!std::isspace(static_cast<unsigned char>(ch))) {
                s.push_back(ch);
            }
        }
        if (s.empty()) {
            throw std::invalid_argument("empty affine expression");
        }
        std::size_t pos = 0;
        bool first = true;
        while (pos < s.size()) {
            int sign = 1;
            if (s[pos] == '+' || s[pos] == '-') {
                sign = s[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                throw std::invalid_argument("expected '+' or '-' in '" + s + "'");
            }
            first = false;

            Integer numerator(1);
            bool have_number = false;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                ++pos;
            }
            if (pos > start) {
                numerator = Integer(s.substr(start, pos - start));
                have_number = true;
            }
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
            }
            std::string name;
            if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
                while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) {
                    name.push_back(s[pos++]);
                }
            }
            if (!have_number && name.empty()) {
                throw std::invalid_argument("malformed term in '" + s + "'");
            }
            Integer denominator(1);
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    ++pos;
                }
                if (pos == start) {
                    throw std::invalid_argument("missing denominator in '" + s + "'");
                }
                denominator = Integer(s.substr(start, pos - start));
            }
            Rational coefficient = make_rational(Integer(numerator * sign), denominator);
            if (name.empty()) {
                out.constant_ += coefficient;
            } else {
                out.coefficients_[name] += coefficient;
            }
        }
        for (auto it = out.coefficients_.begin(); it != out.coefficients_.end();) {
            it = (it->second == 0) ? out.coefficients_.erase(it) : std::next(it);
        }
        return out;
    }

    const Rational &constant() const noexcept
    {
        return constant_;
    }

    Rational coefficient(const std::string &name) const
    {
        auto it = coefficients_.find(name);
        return it == coefficients_.end() ? Rational(0) : it->second;
    }

    const std::map<std::string, Rational> &coefficients() const noexcept
    {
        return coefficients_;
    }

    template <typename Lookup>
    Rational evaluate(Lookup &&value_of) const
    {
        Rational acc = constant_;
        for (const auto &[name, c] : coefficients_) {
            acc += c * value_of(name);
        }
        return acc;
    }

private:
    Rational constant_{0};
    std::map<std::string, Rational> coefficients_;
};

} // namespace g2zeta

#endif
