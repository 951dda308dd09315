#ifndef CLOUDMARKET_MARKET_MODEL_HPP
#define CLOUDMARKET_MARKET_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cloudmarket/matrix.hpp"

namespace cloudmarket {

// Demand attracted by a provider's own QoS level: base + log_coeff * ln(1+s).
// Increasing and strictly concave on s >= 0, with diminishing marginal
// returns, and smooth enough for every derivative the solvers need.
struct QosAttraction {
    double base = 0.0;       // request rate at zero QoS, before price effects
    double log_coeff = 0.0;  // request rate per unit of log-QoS

    double value(double s) const { return base + log_coeff * std::log1p(s); }
    double deriv(double s) const { return log_coeff / (1.0 + s); }
    double deriv2(double s) const { return -log_coeff / ((1.0 + s) * (1.0 + s)); }
};

struct ProviderParams {
    int id = 0;
    double cost_per_request = 0.0;       // cost of serving one request
    double cost_per_capacity = 0.0;      // cost of one unit of service rate
    double own_price_sensitivity = 0.0;  // demand lost per unit of own price
    QosAttraction qos_attraction;
    double price_max = 0.0;

    // Lowest admissible price: the marginal cost per unit of demand.
    double price_min() const { return cost_per_request + cost_per_capacity; }
};

enum class MeasureMode { ExpectedValue, Percentile };

// Response-time guarantees are stated either on the steady-state mean or on
// a percentile. Both lead to the same algebra up to the multiplier below.
struct ServiceMeasure {
    MeasureMode mode = MeasureMode::ExpectedValue;
    double phi = 0.0;  // percentile level, used only in Percentile mode

    static ServiceMeasure expected_value() { return {}; }
    static ServiceMeasure percentile(double phi) {
        return {MeasureMode::Percentile, phi};
    }

    // Capacity multiplier: 1 for expected values, ln(1/(1-phi)) for percentiles.
    double multiplier() const {
        return mode == MeasureMode::ExpectedValue ? 1.0 : -std::log1p(-phi);
    }
};

// Substitution effects between providers. beta couples prices, gamma couples
// QoS levels through alpha(i,j,s) = gamma(i,j) * ln(1+s). Diagonals are zero:
// own-price and own-QoS effects live in ProviderParams.
struct CrossEffects {
    Matrix beta;
    Matrix gamma;

    double alpha(std::size_t i, std::size_t j, double s) const {
        return gamma(i, j) * std::log1p(s);
    }
    double alpha_deriv(std::size_t i, std::size_t j, double s) const {
        return gamma(i, j) / (1.0 + s);
    }
};

struct MarketScenario {
    std::vector<ProviderParams> providers;
    CrossEffects cross;
    double rt_bar = 0.0;  // market-wide response-time upper bound
    ServiceMeasure measure;

    std::size_t size() const { return providers.size(); }
    double capacity_multiplier() const { return measure.multiplier(); }
};

// A joint strategy point: one price and one QoS level per provider. The QoS
// level is headroom below rt_bar, so provider i promises response time
// rt_bar - qos[i].
struct StrategyProfile {
    std::vector<double> prices;
    std::vector<double> qos;
};

enum class Uniqueness { Unique, Multiple, Unknown };
enum class SelectionRule { None, ComponentwiseLargest };

struct SolveMeta {
    int iterations = 0;
    bool converged = false;
    Uniqueness unique = Uniqueness::Unknown;
    SelectionRule selected_rule = SelectionRule::None;
};

struct EquilibriumResult {
    StrategyProfile profile;
    std::vector<double> demands;
    std::vector<double> capacities;
    std::vector<double> profits;
    std::vector<double> price_foc_residuals;
    std::vector<double> qos_foc_residuals;
    SolveMeta meta;
};

// Raised by solvers when no admissible equilibrium can be reported.
class SolveError : public std::runtime_error {
public:
    enum class Kind {
        DemandInfeasible,
        BoundInfeasible,
        NonConvergence,
        IncomparableEquilibria,
    };

    SolveError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct ValidationIssue {
    std::string field;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

// Raised where an operation requires a well-formed scenario up front.
class InvalidScenario : public std::runtime_error {
public:
    explicit InvalidScenario(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// Raw demand rate of every provider at a strategy profile. Affine in all
// prices, separable in all QoS levels. Deliberately unclamped: the value may
// go negative and solvers decide what to do with that.
std::vector<double> demand(const MarketScenario& scenario, const StrategyProfile& profile);
double demand_of(const MarketScenario& scenario, const StrategyProfile& profile, std::size_t i);

// Long-run average profit: demand times gross margin, minus the cost of the
// capacity needed to honor the advertised QoS level.
std::vector<double> profit(const MarketScenario& scenario, const StrategyProfile& profile);
double profit_of(const MarketScenario& scenario, const StrategyProfile& profile, std::size_t i);

// Service rate each provider must reserve so that an M/M/1 queue at the given
// demand meets response time rt_bar - qos[i] under the scenario's measure.
std::vector<double> capacity(const MarketScenario& scenario, const std::vector<double>& demands,
                             const std::vector<double>& qos);

// Response time of one M/M/1 queue: mean or phi-percentile.
double response_time(double mu, double lambda, const ServiceMeasure& measure);

// Checks every structural invariant (dominance conditions, sign constraints,
// bound ordering, measure range) and reports all violations at once.
ValidationReport validate(const MarketScenario& scenario);

// Strategy-space membership: price bounds and 0 <= qos < rt_bar.
ValidationReport check_profile(const MarketScenario& scenario, const StrategyProfile& profile);

// Throws InvalidScenario when validate() finds any issue.
void require_valid(const MarketScenario& scenario);

}  // namespace cloudmarket

#endif  // CLOUDMARKET_MARKET_MODEL_HPP
