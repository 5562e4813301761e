#include "formation_lab/bounds.hpp"

#include <algorithm>

namespace formlab {

namespace {

double log_b(double v, LogBase base) {
    return base == LogBase::Bits ? std::log2(v) : std::log(v);
}

double exp_b(double v, LogBase base) {
    return base == LogBase::Bits ? std::exp2(v) : std::exp(v);
}

}  // namespace

void validate_bound_params(const BoundParams& p) {
    if (p.n < 1) throw InvalidInput("bounds: n must be >= 1");
    if (!(p.sigma > 0.0)) throw InvalidInput("bounds: sigma must be > 0");
    if (!(p.l0 > 0.0)) throw InvalidInput("bounds: l0 must be > 0");
    if (!(p.b > 0.0)) throw InvalidInput("bounds: b must be > 0");
}

double prior_pdf(double r, double l0) {
    if (!(l0 > 0.0)) throw InvalidInput("prior_pdf: l0 must be > 0");
    if (!std::isfinite(r)) throw InvalidInput("prior_pdf: non-finite r");
    if (r < 0.0 || r > l0) return 0.0;
    return 2.0 * r / (l0 * l0);
}

double differential_entropy(double l0, LogBase base) {
    if (!(l0 > 0.0)) throw InvalidInput("differential_entropy: l0 must be > 0");
    return 0.5 - log_b(2.0 / l0, base);
}

double fisher_information(int n, double sigma) {
    if (n < 1) throw InvalidInput("fisher_information: n must be >= 1");
    if (!(sigma > 0.0)) throw InvalidInput("fisher_information: sigma must be > 0");
    return static_cast<double>(n) / (sigma * sigma);
}

double mi_upper_gaussian(const BoundParams& p, LogBase base) {
    validate_bound_params(p);
    double arg = p.n * p.l0 / (2.0 * p.sigma);
    if (!(arg > 0.0)) throw InvalidInput("mi_upper_gaussian: non-positive log argument");
    return log_b(arg, base) + 0.5 - 0.5 * log_b(2.0 * M_PI * M_E, base);
}

double sdpi_alpha(const BoundParams& p) {
    validate_bound_params(p);
    return std::exp(-p.n * p.l0 * p.l0 / (2.0 * p.sigma * p.sigma));
}

double sdpi_eta_upper(const BoundParams& p) {
    return 1.0 - sdpi_alpha(p);
}

double mi_upper(const BoundParams& p, LogBase base) {
    // The quantizer budget b is in bits; in nats mode it converts by ln 2.
    double budget = sdpi_eta_upper(p) * p.b;
    if (base == LogBase::Nats) budget *= M_LN2;
    return std::min(mi_upper_gaussian(p, base), budget);
}

double bayes_lower_bound(const BoundParams& p, LogBase base) {
    return p.l0 / (2.0 * M_E) * exp_b(-mi_upper(p, base), base);
}

}  // namespace formlab
