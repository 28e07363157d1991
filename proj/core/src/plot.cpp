#include "nrm/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace nrm {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string fmtg(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

void emit_plot(const SweepResult& result, const std::string& path) {
    if (result.rows.empty()) {
        throw std::invalid_argument("emit_plot: need at least one row");
    }
    const double width = 800, height = 500;
    const double ml = 70, mr = 30, mt = 40, mb = 60;

    double xmin = result.rows.front().lambda, xmax = xmin;
    int ymax = 1;
    for (const SweepRow& row : result.rows) {
        xmin = std::min(xmin, row.lambda);
        xmax = std::max(xmax, row.lambda);
        ymax = std::max(ymax, row.solved_rank);
        if (row.certified_bound) ymax = std::max(ymax, *row.certified_bound);
    }
    if (xmax == xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    ymax += 1;

    const auto sx = [&](double lambda) {
        return ml + (lambda - xmin) / (xmax - xmin) * (width - ml - mr);
    };
    const auto sy = [&](double rank) {
        return height - mb - rank / static_cast<double>(ymax) * (height - mt - mb);
    };

    std::ofstream os(path);
    if (!os) {
        throw std::runtime_error("emit_plot: cannot open " + path);
    }
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    os << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(height - mb) << "\" x2=\""
       << fmt(width - mr) << "\" y2=\"" << fmt(height - mb)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(mt) << "\" x2=\"" << fmt(ml)
       << "\" y2=\"" << fmt(height - mb) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << fmt(width / 2) << "\" y=\"" << fmt(height - 15)
       << "\" text-anchor=\"middle\" font-size=\"14\">lambda</text>\n";
    os << "<text x=\"20\" y=\"" << fmt(height / 2)
       << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
       << fmt(height / 2) << ")\">rank</text>\n";
    for (int yt = 0; yt <= ymax; ++yt) {
        os << "<text x=\"" << fmt(ml - 8) << "\" y=\"" << fmt(sy(yt) + 4)
           << "\" text-anchor=\"end\" font-size=\"11\">" << yt << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4.0;
        os << "<text x=\"" << fmt(sx(xv)) << "\" y=\"" << fmt(height - mb + 18)
           << "\" text-anchor=\"middle\" font-size=\"11\">" << fmtg(xv) << "</text>\n";
    }

    // vertical lines at defined lambda_k boundaries
    for (size_t k = 0; k < result.sequence.entries.size(); ++k) {
        const LambdaThreshold& e = result.sequence.entries[k];
        if (e.kind == ThresholdKind::empty) continue;
        for (double v : {e.lower, e.kind == ThresholdKind::interval ? e.upper : e.lower}) {
            if (v < xmin || v > xmax) continue;
            os << "<line x1=\"" << fmt(sx(v)) << "\" y1=\"" << fmt(mt) << "\" x2=\""
               << fmt(sx(v)) << "\" y2=\"" << fmt(height - mb)
               << "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
            if (e.kind == ThresholdKind::interval && e.upper == e.lower) break;
            if (e.kind == ThresholdKind::lower_bound) break;
        }
    }

    // solved rank: step plot, rows ascending in lambda
    std::vector<SweepRow> rows = result.rows;
    std::sort(rows.begin(), rows.end(),
              [](const SweepRow& a, const SweepRow& b) { return a.lambda < b.lambda; });
    os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) {
            os << fmt(sx(rows[i].lambda)) << "," << fmt(sy(rows[i - 1].solved_rank)) << " ";
        }
        os << fmt(sx(rows[i].lambda)) << "," << fmt(sy(rows[i].solved_rank));
        if (i + 1 < rows.size()) os << " ";
    }
    os << "\"/>\n";

    // certificate markers
    for (const SweepRow& row : rows) {
        if (!row.certified_bound) continue;
        os << "<circle cx=\"" << fmt(sx(row.lambda)) << "\" cy=\""
           << fmt(sy(*row.certified_bound))
           << "\" r=\"4\" fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";
    }

    os << "</svg>\n";
    if (!os) {
        throw std::runtime_error("emit_plot: write failure on " + path);
    }
}

}  // namespace nrm
