#include "centlab/score.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "centlab/errors.hpp"

namespace centlab {

std::string rational_to_string(const Rational &value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

Rational rational_from_string(const std::string &text) {
    if (text.empty()) {
        throw InvalidParameter("empty rational literal");
    }
    try {
        const auto slash = text.find('/');
        if (slash != std::string::npos) {
            const BigInt p(text.substr(0, slash));
            const BigInt q(text.substr(slash + 1));
            if (q == 0) {
                throw InvalidParameter("zero denominator in '" + text + "'");
            }
            return Rational(p, q);
        }
        const auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            if (digits.empty() || digits == "-" || digits == "+") {
                throw InvalidParameter("malformed decimal '" + text + "'");
            }
            BigInt scale = 1;
            for (std::size_t i = dot + 1; i < text.size(); ++i) {
                scale *= 10;
            }
            return Rational(BigInt(digits), scale);
        }
        return Rational(BigInt(text));
    } catch (const std::exception &) {
        throw InvalidParameter("cannot parse rational '" + text + "'");
    }
}

std::string rational_to_decimal(const Rational &value, int digits) {
    if (digits < 0) {
        throw InvalidParameter("decimal digits must be non-negative");
    }
    const bool negative = value < 0;
    Rational mag = negative ? Rational(-value) : value;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    // round half up on the magnitude
    const BigInt scaled = (boost::multiprecision::numerator(mag) * scale * 2 +
                           boost::multiprecision::denominator(mag)) /
                          (boost::multiprecision::denominator(mag) * 2);
    std::string body = scaled.str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (negative && scaled != 0) ? "-" + body : body;
}

const Rational &Score::rational() const {
    if (!is_exact()) {
        throw InvalidArguments("numeric score has no exact rational form");
    }
    return exact_;
}

double Score::numeric_value() const {
    if (is_exact()) {
        throw InvalidArguments("exact score accessed as numeric");
    }
    return numeric_;
}

double Score::as_double() const {
    return is_exact() ? exact_.convert_to<double>() : numeric_;
}

std::string Score::to_string() const {
    if (is_exact()) {
        return rational_to_string(exact_);
    }
    std::ostringstream out;
    out.precision(10);
    out << numeric_;
    return out.str();
}

namespace {

void require_same_kind(const Score &a, const Score &b) {
    if (a.kind() != b.kind()) {
        throw InvalidArguments("cannot compare exact and numeric scores");
    }
}

} // namespace

Score abs_difference(const Score &a, const Score &b) {
    require_same_kind(a, b);
    if (a.is_exact()) {
        Rational d = a.rational() - b.rational();
        if (d < 0) {
            d = -d;
        }
        return Score::exact(std::move(d));
    }
    return Score::numeric(std::fabs(a.numeric_value() - b.numeric_value()));
}

bool strictly_greater(const Score &a, const Score &b) {
    require_same_kind(a, b);
    if (a.is_exact()) {
        return a.rational() > b.rational();
    }
    return a.numeric_value() - b.numeric_value() > kNumericEpsilon;
}

bool scores_equal(const Score &a, const Score &b) {
    require_same_kind(a, b);
    if (a.is_exact()) {
        return a.rational() == b.rational();
    }
    return std::fabs(a.numeric_value() - b.numeric_value()) <= kNumericEpsilon;
}

CentralityVector::CentralityVector(std::string measure_name, std::vector<Rational> values)
    : measure_name_(std::move(measure_name)), kind_(Exactness::exact), exact_(std::move(values)) {}

CentralityVector::CentralityVector(std::string measure_name, std::vector<double> values)
    : measure_name_(std::move(measure_name)), kind_(Exactness::numeric),
      numeric_(std::move(values)) {}

std::size_t CentralityVector::size() const {
    return kind_ == Exactness::exact ? exact_.size() : numeric_.size();
}

Score CentralityVector::at(NodeId u) const {
    if (u < 0 || static_cast<std::size_t>(u) >= size()) {
        throw InvalidNode("node " + std::to_string(u) + " out of range");
    }
    if (kind_ == Exactness::exact) {
        return Score::exact(exact_[static_cast<std::size_t>(u)]);
    }
    return Score::numeric(numeric_[static_cast<std::size_t>(u)]);
}

std::string CentralityVector::to_json() const {
    nlohmann::json doc;
    doc["measure"] = measure_name_;
    doc["kind"] = kind_ == Exactness::exact ? "exact" : "float";
    auto &values = doc["values"] = nlohmann::json::array();
    if (kind_ == Exactness::exact) {
        for (const auto &v : exact_) {
            values.push_back(rational_to_string(v));
        }
    } else {
        for (double v : numeric_) {
            values.push_back(v);
        }
    }
    return doc.dump();
}

} // namespace centlab
