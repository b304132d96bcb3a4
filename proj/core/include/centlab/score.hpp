#pragma once

#include <string>
#include <vector>

#include "centlab/graph.hpp"
#include "centlab/rational.hpp"

namespace centlab {

/// Comparison band for float-valued measures: strict "a > b" means
/// a - b > kNumericEpsilon, equality means |a - b| <= kNumericEpsilon.
inline constexpr double kNumericEpsilon = 1e-9;

enum class Exactness { exact, numeric };

/// One centrality value: an exact rational or a float, never both.
class Score {
  public:
    static Score exact(Rational value) { return Score(std::move(value)); }
    static Score numeric(double value) { return Score(value); }

    bool is_exact() const { return kind_ == Exactness::exact; }
    Exactness kind() const { return kind_; }

    const Rational &rational() const; // throws InvalidArguments on numeric
    double numeric_value() const;     // throws InvalidArguments on exact
    double as_double() const;

    std::string to_string() const;

    /// |a - b|, same kind required.
    friend Score abs_difference(const Score &a, const Score &b);
    /// Strict order with the epsilon band applied to numeric scores.
    friend bool strictly_greater(const Score &a, const Score &b);
    friend bool scores_equal(const Score &a, const Score &b);

  private:
    explicit Score(Rational r) : kind_(Exactness::exact), exact_(std::move(r)) {}
    explicit Score(double d) : kind_(Exactness::numeric), numeric_(d) {}

    Exactness kind_;
    Rational exact_;
    double numeric_ = 0.0;
};

/// Per-node scores of one measure on one graph.
class CentralityVector {
  public:
    CentralityVector(std::string measure_name, std::vector<Rational> values);
    CentralityVector(std::string measure_name, std::vector<double> values);

    const std::string &measure_name() const { return measure_name_; }
    Exactness kind() const { return kind_; }
    std::size_t size() const;
    Score at(NodeId u) const;

    const std::vector<Rational> &exact_values() const { return exact_; }
    const std::vector<double> &numeric_values() const { return numeric_; }

    /// {"measure": ..., "kind": "exact"|"float", "values": [...]}; exact
    /// entries are reduced-fraction strings, float entries JSON numbers.
    std::string to_json() const;

  private:
    std::string measure_name_;
    Exactness kind_;
    std::vector<Rational> exact_;
    std::vector<double> numeric_;
};

} // namespace centlab
