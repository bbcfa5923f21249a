#pragma once

#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fbmc::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { LessEqual, GreaterEqual, Equal };

enum class Status { Optimal, Infeasible, Unbounded, NumericalFailure };

const char* status_name(Status s);

/// Linear program: continuous variables with bounds, linear rows, minimize c'x.
///
/// Dual sign convention (minimization): a binding ">= rhs" row has dual >= 0,
/// a binding "<= rhs" row has dual <= 0, equality rows are free. The dual of a
/// row measures d(objective)/d(rhs).
class Model {
public:
    int add_variable(std::string name, double lb, double ub, double cost = 0.0);
    int add_constraint(std::string name, Sense sense, double rhs,
                       std::vector<std::pair<int, double>> terms);

    void set_cost(int var, double cost);
    void set_bounds(int var, double lb, double ub);

    int num_variables() const { return static_cast<int>(var_names_.size()); }
    int num_constraints() const { return static_cast<int>(row_senses_.size()); }

    const std::string& variable_name(int v) const { return var_names_[v]; }
    const std::string& constraint_name(int r) const { return row_names_[r]; }
    double lower_bound(int v) const { return lb_[v]; }
    double upper_bound(int v) const { return ub_[v]; }
    double cost(int v) const { return cost_[v]; }

    /// CPLEX LP text format, for cross-checking with external solvers.
    void write_lp_format(std::ostream& os) const;

private:
    friend class Simplex;

    std::vector<std::string> var_names_;
    std::vector<double> lb_, ub_, cost_;
    std::vector<std::string> row_names_;
    std::vector<Sense> row_senses_;
    std::vector<double> rhs_;
    std::vector<std::vector<std::pair<int, double>>> rows_;
};

struct Solution {
    Status status = Status::NumericalFailure;
    double objective = 0.0;
    std::vector<double> x;     // per variable
    std::vector<double> dual;  // per constraint
    int iterations = 0;
    double max_residual = 0.0;  // max |Ax - b| violation over all rows

    bool optimal() const { return status == Status::Optimal; }
};

Solution solve(const Model& model);

}  // namespace fbmc::lp
