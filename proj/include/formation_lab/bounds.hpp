#pragma once

#include <cmath>

#include "formation_lab/core.hpp"

namespace formlab {

// Base used for the information quantities. Bits reads every log in the
// bound formulas as log2 and exponentiates base 2 (matching a quantizer
// budget measured in bits); Nats reads them as natural logs. The additive
// 1/2 constants are kept as written in either base, so the two modes are
// base readings of the same formulas, not unit conversions of one another.
enum class LogBase { Bits, Nats };

// Parameters of the distance-estimation problem: n Gaussian samples with std
// dev sigma, prior range l0 (distance ~ 2r/l0^2 on [0, l0]), and a quantizer
// budget of b bits.
struct BoundParams {
    int n = 10;
    double sigma = 1.0;
    double l0 = 120.0;
    double b = 7.0;
};

void validate_bound_params(const BoundParams& p);

// Prior density of the distance: 2r/l0^2 on [0, l0], induced by a
// destination uniform on a disk of radius l0 around the robot.
double prior_pdf(double r, double l0);

// Differential entropy of the prior: 1/2 - log(2/l0).
double differential_entropy(double l0, LogBase base = LogBase::Bits);

// Fisher information of n Gaussian samples about their mean: n / sigma^2.
double fisher_information(int n, double sigma);

// Large-sample capacity of the unquantized channel:
// log(n*l0/(2*sigma)) + 1/2 - (1/2)*log(2*pi*e).
double mi_upper_gaussian(const BoundParams& p, LogBase base = LogBase::Bits);

// Contraction floor of the strong data-processing inequality:
// alpha = exp(-n*l0^2 / (2*sigma^2)); eta <= 1 - alpha.
double sdpi_alpha(const BoundParams& p);
double sdpi_eta_upper(const BoundParams& p);

// Information actually available to the estimator: the Gaussian capacity
// capped by the contracted quantizer budget eta * b.
double mi_upper(const BoundParams& p, LogBase base = LogBase::Bits);

// Bayes risk lower bound for distance estimation:
// (l0 / (2e)) * base^(-mi_upper).
double bayes_lower_bound(const BoundParams& p, LogBase base = LogBase::Bits);

}  // namespace formlab
