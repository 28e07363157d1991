#include "nrm/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nrm {

namespace {

constexpr char kMagic[4] = {'N', 'R', 'M', 'D'};
constexpr uint16_t kVersion = 1;

void write_bytes(std::ostream& os, const void* data, size_t size) {
    os.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
}

void read_bytes(std::istream& is, void* data, size_t size, const char* field) {
    is.read(static_cast<char*>(data), static_cast<std::streamsize>(size));
    if (static_cast<size_t>(is.gcount()) != size) {
        throw std::runtime_error(std::string("load_dataset: truncated file while reading ") + field);
    }
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_double_list(const std::string& s, const char* key) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw std::runtime_error(std::string("config: bad number in ") + key + ": " + item);
        }
    }
    return out;
}

}  // namespace

void save_dataset(const Dataset& d, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("save_dataset: cannot open " + path);
    }
    write_bytes(os, kMagic, 4);
    write_bytes(os, &kVersion, sizeof(kVersion));
    const uint32_t n = static_cast<uint32_t>(d.n());
    const uint32_t p = static_cast<uint32_t>(d.p());
    const uint32_t q = static_cast<uint32_t>(d.q());
    write_bytes(os, &n, 4);
    write_bytes(os, &p, 4);
    write_bytes(os, &q, 4);
    write_bytes(os, d.response().data(), sizeof(double) * n);
    for (int i = 0; i < d.n(); ++i) {
        // row-major on disk
        Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> X = d.sensing(i);
        write_bytes(os, X.data(), sizeof(double) * p * q);
    }
    if (!os) {
        throw std::runtime_error("save_dataset: write failure on " + path);
    }
}

Dataset load_dataset(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw std::runtime_error("load_dataset: cannot open " + path);
    }
    char magic[4];
    read_bytes(is, magic, 4, "magic");
    if (std::memcmp(magic, kMagic, 4) != 0) {
        throw std::runtime_error("load_dataset: bad magic bytes, not an NRMD file");
    }
    uint16_t version = 0;
    read_bytes(is, &version, sizeof(version), "version");
    if (version != kVersion) {
        throw std::runtime_error("load_dataset: unsupported version " + std::to_string(version));
    }
    uint32_t n = 0, p = 0, q = 0;
    read_bytes(is, &n, 4, "n");
    read_bytes(is, &p, 4, "p");
    read_bytes(is, &q, 4, "q");
    if (n == 0 || p == 0 || q == 0 || p > 1u << 20 || q > 1u << 20) {
        throw std::runtime_error("load_dataset: invalid header field (n, p, or q)");
    }
    Vector y(n);
    read_bytes(is, y.data(), sizeof(double) * n, "y");
    std::vector<Matrix> sensing;
    sensing.reserve(n);
    for (uint32_t i = 0; i < n; ++i) {
        Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> X(p, q);
        read_bytes(is, X.data(), sizeof(double) * p * q, "sensing matrix body");
        sensing.emplace_back(X);
    }
    char extra;
    if (is.read(&extra, 1)) {
        throw std::runtime_error("load_dataset: trailing bytes after declared n matrices");
    }
    return Dataset(std::move(sensing), std::move(y));
}

void write_sweep_csv(const SweepResult& result, const std::string& path) {
    std::ofstream os(path);
    if (!os) {
        throw std::runtime_error("write_sweep_csv: cannot open " + path);
    }
    os << "# lambda_max = " << format_double(result.lambda_max) << "\n";
    for (size_t k = 0; k < result.sequence.entries.size(); ++k) {
        const LambdaThreshold& e = result.sequence.entries[k];
        os << "# lambda_" << (k + 1) << " = ";
        switch (e.kind) {
            case ThresholdKind::lower_bound:
                os << "lower_bound " << format_double(e.lower);
                break;
            case ThresholdKind::interval:
                os << "interval " << format_double(e.lower) << " " << format_double(e.upper);
                break;
            case ThresholdKind::empty:
                os << "empty";
                break;
        }
        os << "\n";
    }
    os << "lambda,certified_bound,solved_rank,final_gap,objective,seconds\n";
    for (const SweepRow& row : result.rows) {
        os << format_double(row.lambda) << ",";
        if (row.certified_bound) os << *row.certified_bound;
        os << "," << row.solved_rank << "," << format_double(row.final_gap) << ","
           << format_double(row.objective) << "," << format_double(row.seconds) << "\n";
    }
    if (!os) {
        throw std::runtime_error("write_sweep_csv: write failure on " + path);
    }
}

std::vector<SweepRow> read_sweep_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) {
        throw std::runtime_error("read_sweep_csv: cannot open " + path);
    }
    std::vector<SweepRow> rows;
    std::string line;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;  // column header
            continue;
        }
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 6) {
            throw std::runtime_error("read_sweep_csv: line " + std::to_string(lineno) +
                                     ": expected 6 columns");
        }
        SweepRow row;
        row.lambda = std::stod(fields[0]);
        if (!trim(fields[1]).empty()) row.certified_bound = std::stoi(fields[1]);
        row.solved_rank = std::stoi(fields[2]);
        row.final_gap = std::stod(fields[3]);
        row.objective = std::stod(fields[4]);
        row.seconds = std::stod(fields[5]);
        rows.push_back(row);
    }
    return rows;
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    bool loss_is_huber = false;
    double kappa = 2.5;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config: line " + std::to_string(lineno) +
                                     ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "shape") {
                if (value == "block_diagonal") cfg.shape.kind = ShapeKind::block_diagonal;
                else if (value == "cross_bars") cfg.shape.kind = ShapeKind::cross_bars;
                else if (value == "custom_grid") cfg.shape.kind = ShapeKind::custom_grid;
                else throw std::runtime_error("config: unknown shape " + value);
            } else if (key == "p") cfg.shape.p = std::stoi(value);
            else if (key == "q") cfg.shape.q = std::stoi(value);
            else if (key == "rank") cfg.shape.target_rank = std::stoi(value);
            else if (key == "n") cfg.n = std::stoi(value);
            else if (key == "noise") {
                if (value == "gaussian") cfg.noise.family = NoiseFamily::gaussian;
                else if (value == "student_t") cfg.noise.family = NoiseFamily::student_t;
                else throw std::runtime_error("config: unknown noise family " + value);
            } else if (key == "variance") cfg.noise.variance = std::stod(value);
            else if (key == "dof") cfg.noise.dof = std::stod(value);
            else if (key == "noise_seed") cfg.noise.seed = std::stoull(value);
            else if (key == "seed") cfg.seed = std::stoull(value);
            else if (key == "loss") {
                if (value == "ls") loss_is_huber = false;
                else if (value == "huber") loss_is_huber = true;
                else throw std::runtime_error("config: unknown loss " + value);
            } else if (key == "kappa") kappa = std::stod(value);
            else if (key == "sweep_values") cfg.sweep_values = parse_double_list(value, key.c_str());
            else if (key == "sweep_fractions") cfg.sweep_fractions = parse_double_list(value, key.c_str());
            else if (key == "solver_max_iterations") cfg.solver.max_iterations = std::stoi(value);
            else if (key == "solver_gap_tolerance") cfg.solver.gap_tolerance = std::stod(value);
            else if (key == "solver_step_rule") {
                if (value == "fixed") cfg.solver.step_rule = StepRule::fixed_from_lipschitz;
                else if (value == "backtracking") cfg.solver.step_rule = StepRule::backtracking;
                else throw std::runtime_error("config: unknown step rule " + value);
            } else if (key == "solver_restart") cfg.solver.restart = (value == "true" || value == "1");
            else if (key == "dataset") cfg.dataset_path = value;
            else if (key == "out_csv") cfg.out_csv = value;
            else if (key == "out_svg") cfg.out_svg = value;
            else if (key == "timing") cfg.timing = (value == "on" || value == "true" || value == "1");
            else throw std::runtime_error("config: unknown key " + key);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("config: line " + std::to_string(lineno) +
                                     ": bad value for " + key);
        }
    }
    cfg.loss = loss_is_huber ? LossModel::huber(kappa) : LossModel::least_squares();
    for (double v : cfg.sweep_values) {
        if (!(v > 0.0)) throw std::runtime_error("config: sweep values must be positive");
    }
    for (double v : cfg.sweep_fractions) {
        if (!(v > 0.0)) throw std::runtime_error("config: sweep fractions must be positive");
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) {
        throw std::runtime_error("load_config: cannot open " + path);
    }
    std::stringstream buf;
    buf << is.rdbuf();
    return parse_config(buf.str());
}

}  // namespace nrm
