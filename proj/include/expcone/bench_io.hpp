#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expcone/model.hpp"

namespace expcone {

/// PCG64 (setseq 128/64 XSL-RR). Fixed stream constant 54; draws are
/// documented per generator so instances are byte-identical across platforms.
class Pcg64 {
  public:
    explicit Pcg64(std::uint64_t seed, std::uint64_t stream = 54u);
    std::uint64_t next();
    /// Uniform integer in [lo, hi], both included (modulo reduction).
    int next_int(int lo, int hi);

  private:
    unsigned __int128 state_;
    unsigned __int128 inc_;
};

enum class InstanceFamily { Packing, Covering, Slr };

struct InstanceSpec {
    InstanceFamily family = InstanceFamily::Packing;
    int n = 0;  // decision variables (features for SLR)
    int m = 0;  // linear rows (samples for SLR)
    int p = 1;  // cones
    int t = 0;  // leading binary variables
    std::uint64_t seed = 0;
    double lambda = 0.01;  // SLR regularization
    int k = 1;             // SLR cardinality
};

/// Packing instance: a ~ int(0,9) row-major over (i, j), then c ~ -int(0,9)/n
/// row-major over (l, j); b_i = 4n when pure binary (t = n), else 2n.
/// Cones (v_l, 1, sum_j c_lj x_j); objective sum_l v_l.
ModelIR gen_packing(const InstanceSpec& spec);

/// Covering instance: same stream layout with c ~ +int(0,9)/n and b_i = 2n;
/// cones (1, sum_j c_lj x_j, -v_l) encode v_l >= (c x) log(c x).
ModelIR gen_covering(const InstanceSpec& spec);

/// Sparse logistic regression over a dense feature table: two cones per
/// sample, big-M switch rows with M = n log(2) / lambda, cardinality k, and
/// an L1 objective by splitting theta into nonnegative parts.
/// kernel_expand appends the products x_i x_j (i <= j) of the raw features.
ModelIR gen_slr(const std::vector<std::vector<double>>& features,
                const std::vector<int>& labels, double lambda, int k,
                bool kernel_expand = false);

struct OracleResult {
    bool feasible = false;
    double objective = 0.0;
    std::vector<double> x;
};

/// Exact reference for all-binary models whose cones follow the generator
/// patterns: enumerates binary assignments, checks linear rows, evaluates
/// each cone's output variable analytically (exp(.) or w log w).
/// Throws std::invalid_argument for models outside that class or with more
/// than 2^20 assignments.
OracleResult brute_force_oracle(const ModelIR& model);

std::string emit_json(const ModelIR& model);
ModelIR parse_json(const std::string& text);
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

/// Conic Benchmark Format v3: VER, OBJSENSE, VAR, INT, CON sections; EXP
/// cones for original models, Q (radius-first) for reformulated L3 rows.
std::string emit_cbf(const ModelIR& model);
void emit_cbf(const ModelIR& model, const std::string& path);

/// CPLEX-style LP file of the polyhedral MILP (17 significant digits).
struct LpExport {
    std::vector<double> lb, ub, obj;
    std::vector<LinearRow> rows;
    std::vector<int> integer_cols;
};
std::string emit_lp(const LpExport& milp);

/// CSV ingestion for SLR: optional header, label column by name or last;
/// returns features and 0/1 labels.
struct CsvData {
    std::vector<std::vector<double>> features;
    std::vector<int> labels;
};
CsvData read_csv(const std::string& text, const std::string& label_column = "");

}  // namespace expcone
