// sweep.hpp: parameter sweeps over (g, detuning, bias), record serialization and error reports.

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rabi/model.hpp"

namespace rabi {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class MissingExactError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// detuning_delta sweeps delta - 1, i.e. delta = 1 + value.
enum class Axis { g, detuning_delta, epsilon };
enum class OutputFormat { csv, json };

std::string_view to_string(Axis axis);
std::optional<Axis> parse_axis(std::string_view s);

struct Range {
    double start{0.0};
    double stop{1.0};
    int count{2};

    // Parses "start:stop:count".
    static Range parse(std::string_view text);
    double at(int i) const;
};

struct SweepConfig {
    Axis axis{Axis::g};
    Range range;
    ModelParams fixed;  // the swept field is overwritten at each point
    std::vector<Method> methods;
    int levels{7};
    int exact_levels{0};  // levels of the exact reference; 0: same as levels
    double tol{1e-10};
    OutputFormat output{OutputFormat::csv};
    std::string output_path;  // empty: stdout
    int threads{0};           // 0: RABI_THREADS or hardware concurrency

    // Throws ConfigError.
    void validate() const;
    std::vector<ModelParams> grid() const;
};

struct SweepRecord {
    double g{0.0};
    double delta{0.0};
    double epsilon{0.0};
    Method method{Method::exact};
    int level_index{0};
    std::optional<double> energy;
    std::optional<int> n_tr_used;
    std::string flag{"ok"};  // ok | out_of_regime | error:<kind>
    Parity parity{Parity::none};

    bool has_energy() const { return flag == "ok" || flag == "out_of_regime"; }
    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

// Records for one point: method-minor, level-minor. Failures become error records. The exact
// method yields exact_levels records (levels when <= 0).
std::vector<SweepRecord> evaluate_point(const ModelParams& params,
                                        const std::vector<Method>& methods, int levels,
                                        double tol, int exact_levels = 0);

// Point-major, method-minor, level-minor, independent of thread scheduling.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

bool all_points_failed(const std::vector<SweepRecord>& records);

struct ErrorSummaryRow {
    Method method{Method::exact};
    int level_index{0};
    double max_abs_error{0.0};
    double mean_abs_error{0.0};
    int samples{0};
};

// Per-method, per-level max and mean |E_method - E_exact|. When both the method and the exact
// records at a point carry parity labels, levels are matched by rank within each parity sector;
// otherwise by level_index. Levels without an exact partner are skipped and do not count toward
// samples. Throws MissingExactError if a point lacks exact energies.
std::vector<ErrorSummaryRow> report_errors(const std::vector<SweepRecord>& records);

void write_csv(const std::vector<SweepRecord>& records, std::ostream& out);
void write_json(const std::vector<SweepRecord>& records, std::ostream& out);
std::vector<SweepRecord> parse_json(std::string_view text);
void write_error_table(const std::vector<ErrorSummaryRow>& rows, std::ostream& out);

// 17 significant digits.
std::string format_double(double value);

}  // namespace rabi
