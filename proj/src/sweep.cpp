#include "rabi/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "rabi/basis.hpp"
#include "rabi/closedform.hpp"
#include "rabi/errors.hpp"
#include "rabi/exact.hpp"
#include "rabi/grwa.hpp"

namespace rabi {

namespace {

// Rows beyond the highest manifold kept for the perturbative sums.
constexpr int kSumRows = 128;

double parse_number(std::string_view text, const char* what) {
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty())
        throw ConfigError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    return value;
}

std::string error_kind(std::exception_ptr error) {
    try {
        std::rethrow_exception(error);
    } catch (const DiscriminantError&) {
        return "error:discriminant";
    } catch (const ComplexRadicalError&) {
        return "error:complex_radical";
    } catch (const SingularDenominatorError&) {
        return "error:singular_denominator";
    } catch (const DomainError&) {
        return "error:domain";
    } catch (const IndexError&) {
        return "error:index";
    } catch (const ResourceError&) {
        return "error:resource";
    } catch (const ConvergenceError&) {
        return "error:convergence";
    } catch (...) {
        return "error:internal";
    }
}

SweepRecord base_record(const ModelParams& p, Method method, int level) {
    SweepRecord r;
    r.g = p.g;
    r.delta = p.delta;
    r.epsilon = p.epsilon;
    r.method = method;
    r.level_index = level;
    return r;
}

void append_levels(std::vector<SweepRecord>& out, const ModelParams& p, Method method,
                   const std::vector<Level>& levels, const char* flag) {
    for (const Level& level : levels) {
        SweepRecord r = base_record(p, method, level.level_index);
        r.energy = level.energy;
        r.flag = flag;
        r.parity = level.parity;
        out.push_back(std::move(r));
    }
}

void evaluate_method(std::vector<SweepRecord>& out, const ModelParams& p, Method method,
                     int levels, double tol) {
    const int m_max = std::max(0, (levels - 1) / 2);
    auto table = [&](int manifold_rows) {
        return build_overlap_table(p, std::min(kMaxFockIndex, manifold_rows + kSumRows));
    };

    switch (method) {
        case Method::exact: {
            const Spectrum s = converged_spectrum(p, levels, tol);
            for (int i = 0; i < levels; ++i) {
                SweepRecord r = base_record(p, method, i);
                r.energy = s.energies[i];
                r.n_tr_used = s.n_tr_used;
                if (!s.parity_labels.empty()) r.parity = s.parity_labels[i];
                out.push_back(std::move(r));
            }
            return;
        }
        case Method::zoa:
            append_levels(out, p, method, zoa_ladder(p, levels, table(levels)), "ok");
            return;
        case Method::dsc:
            append_levels(out, p, method, dsc_ladder(p, levels, table(levels)), "ok");
            return;
        case Method::vvp: {
            const int l = vvp_resonance_order(p.epsilon);
            append_levels(out, p, method, vvp_ladder(p, levels, table(levels + l)), "ok");
            return;
        }
        case Method::grwa: {
            const OverlapTable d = table(m_max + 2);
            const GrwaLevels g = p.unbiased() ? foa_levels(p, m_max, d)
                                              : grwa_biased_levels(p, m_max, d);
            append_levels(out, p, method, g.levels(levels), g.out_of_regime ? "out_of_regime" : "ok");
            return;
        }
        case Method::brwa: {
            const GrwaLevels g = brwa_levels(p, m_max, table(m_max + 3));
            append_levels(out, p, method, g.levels(levels), g.out_of_regime ? "out_of_regime" : "ok");
            return;
        }
        case Method::variational: {
            const VariationalResult v = variational_ground(p);
            append_levels(out, p, method, {{0, v.energy, Parity::even}}, "ok");
            return;
        }
    }
}

int thread_count(int requested, std::size_t work) {
    int n = requested;
    if (n <= 0) {
        if (const char* env = std::getenv("RABI_THREADS")) n = std::atoi(env);
    }
    if (n <= 0) n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), std::max<std::size_t>(1, work)));
}

}  // namespace

std::string_view to_string(Axis axis) {
    switch (axis) {
        case Axis::g: return "g";
        case Axis::detuning_delta: return "detuning_delta";
        case Axis::epsilon: return "epsilon";
    }
    return "g";
}

std::optional<Axis> parse_axis(std::string_view s) {
    if (s == "g") return Axis::g;
    if (s == "detuning_delta") return Axis::detuning_delta;
    if (s == "epsilon") return Axis::epsilon;
    return std::nullopt;
}

Range Range::parse(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos)
        throw ConfigError("range must be start:stop:count, got '" + std::string(text) + "'");
    Range r;
    r.start = parse_number(text.substr(0, first), "range start");
    r.stop = parse_number(text.substr(first + 1, second - first - 1), "range stop");
    const double count = parse_number(text.substr(second + 1), "range count");
    if (count != std::floor(count) || count > 1e7)
        throw ConfigError("range count must be an integer");
    r.count = static_cast<int>(count);
    return r;
}

double Range::at(int i) const {
    if (i == count - 1) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void SweepConfig::validate() const {
    if (range.count < 2) throw ConfigError("range count must be >= 2");
    if (!(range.start < range.stop)) throw ConfigError("range start must be < stop");
    if (!std::isfinite(range.start) || !std::isfinite(range.stop))
        throw ConfigError("range bounds must be finite");
    if (levels < 1) throw ConfigError("levels must be >= 1");
    if (exact_levels < 0) throw ConfigError("exact levels must be >= 0");
    if (!(tol > 0.0)) throw ConfigError("tol must be positive");
    if (methods.empty()) throw ConfigError("method set must be non-empty");
    for (const ModelParams& p : grid()) {
        try {
            p.validate();
        } catch (const DomainError& e) {
            throw ConfigError(std::string("grid point invalid: ") + e.what());
        }
    }
}

std::vector<ModelParams> SweepConfig::grid() const {
    std::vector<ModelParams> points;
    points.reserve(static_cast<std::size_t>(std::max(0, range.count)));
    for (int i = 0; i < range.count; ++i) {
        ModelParams p = fixed;
        const double value = range.at(i);
        switch (axis) {
            case Axis::g: p.g = value; break;
            case Axis::detuning_delta: p.delta = 1.0 + value; break;
            case Axis::epsilon: p.epsilon = value; break;
        }
        points.push_back(p);
    }
    return points;
}

std::vector<SweepRecord> evaluate_point(const ModelParams& params,
                                        const std::vector<Method>& methods, int levels,
                                        double tol, int exact_levels) {
    std::vector<SweepRecord> out;
    for (const Method method : methods) {
        std::vector<SweepRecord> block;
        const int k = method == Method::exact && exact_levels > 0 ? exact_levels : levels;
        try {
            evaluate_method(block, params, method, k, tol);
        } catch (...) {
            block.clear();
            const std::string flag = error_kind(std::current_exception());
            const int count = method == Method::variational ? 1 : k;
            for (int i = 0; i < count; ++i) {
                SweepRecord r = base_record(params, method, i);
                r.flag = flag;
                block.push_back(std::move(r));
            }
        }
        out.insert(out.end(), std::make_move_iterator(block.begin()),
                   std::make_move_iterator(block.end()));
    }
    return out;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
    config.validate();
    const std::vector<ModelParams> points = config.grid();
    std::vector<std::vector<SweepRecord>> per_point(points.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++)
            per_point[i] = evaluate_point(points[i], config.methods, config.levels, config.tol,
                                          config.exact_levels);
    };
    const int n_threads = thread_count(config.threads, points.size());
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<SweepRecord> records;
    for (auto& block : per_point)
        records.insert(records.end(), std::make_move_iterator(block.begin()),
                       std::make_move_iterator(block.end()));
    return records;
}

bool all_points_failed(const std::vector<SweepRecord>& records) {
    return std::none_of(records.begin(), records.end(),
                        [](const SweepRecord& r) { return r.has_energy(); });
}

std::vector<ErrorSummaryRow> report_errors(const std::vector<SweepRecord>& records) {
    struct Accumulator {
        double max_abs{0.0};
        double sum_abs{0.0};
        int samples{0};
    };
    std::vector<Method> method_order;
    std::map<std::pair<int, int>, Accumulator> acc;  // (method position, level)

    std::size_t begin = 0;
    while (begin < records.size()) {
        std::size_t end = begin;
        const SweepRecord& head = records[begin];
        while (end < records.size() && records[end].g == head.g &&
               records[end].delta == head.delta && records[end].epsilon == head.epsilon)
            ++end;

        std::vector<const SweepRecord*> exact;
        for (std::size_t i = begin; i < end; ++i)
            if (records[i].method == Method::exact && records[i].has_energy())
                exact.push_back(&records[i]);
        if (exact.empty())
            throw MissingExactError("report_errors: no exact energies at g=" + format_double(head.g) +
                                    " delta=" + format_double(head.delta) +
                                    " epsilon=" + format_double(head.epsilon));
        std::sort(exact.begin(), exact.end(),
                  [](auto* a, auto* b) { return a->level_index < b->level_index; });
        const bool exact_labeled = std::all_of(exact.begin(), exact.end(), [](auto* r) {
            return r->parity != Parity::none;
        });

        std::map<Method, std::vector<const SweepRecord*>> by_method;
        for (std::size_t i = begin; i < end; ++i) {
            const SweepRecord& r = records[i];
            if (r.method == Method::exact) continue;
            if (std::find(method_order.begin(), method_order.end(), r.method) == method_order.end())
                method_order.push_back(r.method);
            if (r.has_energy()) by_method[r.method].push_back(&r);
        }

        for (auto& [method, levels] : by_method) {
            const int pos = static_cast<int>(
                std::find(method_order.begin(), method_order.end(), method) - method_order.begin());
            std::sort(levels.begin(), levels.end(),
                      [](auto* a, auto* b) { return a->level_index < b->level_index; });
            const bool labeled = exact_labeled && std::all_of(levels.begin(), levels.end(), [](auto* r) {
                return r->parity != Parity::none;
            });

            std::map<Parity, int> method_rank;
            for (const SweepRecord* r : levels) {
                const SweepRecord* reference = nullptr;
                if (labeled) {
                    int rank = method_rank[r->parity]++;
                    for (const SweepRecord* e : exact) {
                        if (e->parity != r->parity) continue;
                        if (rank-- == 0) {
                            reference = e;
                            break;
                        }
                    }
                } else {
                    for (const SweepRecord* e : exact)
                        if (e->level_index == r->level_index) reference = e;
                }
                if (reference == nullptr) continue;
                const double err = std::abs(*r->energy - *reference->energy);
                Accumulator& a = acc[{pos, r->level_index}];
                a.max_abs = std::max(a.max_abs, err);
                a.sum_abs += err;
                ++a.samples;
            }
        }
        begin = end;
    }

    std::vector<ErrorSummaryRow> rows;
    for (const auto& [key, a] : acc)
        rows.push_back({method_order[key.first], key.second, a.max_abs,
                        a.samples ? a.sum_abs / a.samples : 0.0, a.samples});
    return rows;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
    out << "g,delta,epsilon,method,level_index,energy,n_tr_used,flag\n";
    for (const SweepRecord& r : records) {
        out << format_double(r.g) << ',' << format_double(r.delta) << ','
            << format_double(r.epsilon) << ',' << to_string(r.method) << ',' << r.level_index
            << ',';
        if (r.energy) out << format_double(*r.energy);
        out << ',';
        if (r.n_tr_used) out << *r.n_tr_used;
        out << ',' << r.flag << '\n';
    }
}

void write_json(const std::vector<SweepRecord>& records, std::ostream& out) {
    nlohmann::json doc;
    doc["records"] = nlohmann::json::array();
    for (const SweepRecord& r : records) {
        nlohmann::json j;
        j["g"] = r.g;
        j["delta"] = r.delta;
        j["epsilon"] = r.epsilon;
        j["method"] = to_string(r.method);
        j["level_index"] = r.level_index;
        j["energy"] = r.energy ? nlohmann::json(*r.energy) : nlohmann::json(nullptr);
        j["n_tr_used"] = r.n_tr_used ? nlohmann::json(*r.n_tr_used) : nlohmann::json(nullptr);
        j["flag"] = r.flag;
        j["parity"] = to_string(r.parity);
        doc["records"].push_back(std::move(j));
    }
    out << doc.dump(1) << '\n';
}

std::vector<SweepRecord> parse_json(std::string_view text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    std::vector<SweepRecord> records;
    for (const auto& j : doc.at("records")) {
        SweepRecord r;
        r.g = j.at("g").get<double>();
        r.delta = j.at("delta").get<double>();
        r.epsilon = j.at("epsilon").get<double>();
        const auto method = parse_method(j.at("method").get<std::string>());
        if (!method) throw std::invalid_argument("parse_json: unknown method");
        r.method = *method;
        r.level_index = j.at("level_index").get<int>();
        if (!j.at("energy").is_null()) r.energy = j.at("energy").get<double>();
        if (!j.at("n_tr_used").is_null()) r.n_tr_used = j.at("n_tr_used").get<int>();
        r.flag = j.at("flag").get<std::string>();
        const auto parity = parse_parity(j.value("parity", std::string("none")));
        if (!parity) throw std::invalid_argument("parse_json: unknown parity");
        r.parity = *parity;
        records.push_back(std::move(r));
    }
    return records;
}

void write_error_table(const std::vector<ErrorSummaryRow>& rows, std::ostream& out) {
    out << "method,level_index,max_abs_error,mean_abs_error,samples\n";
    for (const ErrorSummaryRow& row : rows)
        out << to_string(row.method) << ',' << row.level_index << ','
            << format_double(row.max_abs_error) << ',' << format_double(row.mean_abs_error) << ','
            << row.samples << '\n';
}

}  // namespace rabi
