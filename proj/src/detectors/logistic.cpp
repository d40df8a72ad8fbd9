#include <cmath>

#include "detail.hpp"
#include "eda/detectors.hpp"
#include "eda/detectors_internal.hpp"

namespace eda::detectors {

namespace {

double sigmoid(double v) {
    return v >= 0.0 ? 1.0 / (1.0 + std::exp(-v))
                    : std::exp(v) / (1.0 + std::exp(v));
}

// log(1 + e^f) without overflow
double softplus(double f) {
    return f > 0.0 ? f + std::log1p(std::exp(-f)) : std::log1p(std::exp(f));
}

class LogisticDetector final : public TrainedDetector {
public:
    LogisticDetector(numkit::Standardizer scaler, std::uint64_t seed,
                     LogisticHp hp, std::vector<double> w, double b)
        : TrainedDetector(std::move(scaler), seed),
          hp_(hp),
          w_(std::move(w)),
          b_(b) {}

    Algorithm algorithm() const override {
        return Algorithm::LogisticRegression;
    }

private:
    double score_standardized(std::span<const double> z) const override {
        double f = b_;
        for (std::size_t i = 0; i < z.size(); ++i) f += w_[i] * z[i];
        return sigmoid(f);
    }
    nlohmann::json hp_json() const override {
        return hyperparams_to_json(Hyperparams{hp_});
    }
    nlohmann::json params_json() const override {
        return {{"weights", w_}, {"bias", b_}};
    }

    LogisticHp hp_;
    std::vector<double> w_;
    double b_;
};

}  // namespace

namespace internal {

double logistic_loss_grad(const numkit::Matrix& xs, const std::vector<int>& y01,
                          std::span<const double> w, double b, double lambda,
                          std::vector<double>* grad_w, double* grad_b) {
    const std::size_t n = xs.rows();
    const std::size_t d = xs.cols();
    double loss = 0.0;
    if (grad_w) grad_w->assign(d, 0.0);
    if (grad_b) *grad_b = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        const auto row = xs.row(r);
        double f = b;
        for (std::size_t c = 0; c < d; ++c) f += w[c] * row[c];
        loss += softplus(f) - static_cast<double>(y01[r]) * f;
        if (grad_w) {
            const double resid = sigmoid(f) - static_cast<double>(y01[r]);
            for (std::size_t c = 0; c < d; ++c) (*grad_w)[c] += resid * row[c];
            *grad_b += resid;
        }
    }
    loss /= static_cast<double>(n);
    double penalty = 0.0;
    for (std::size_t c = 0; c < d; ++c) penalty += w[c] * w[c];
    loss += 0.5 * lambda * penalty;
    if (grad_w) {
        for (std::size_t c = 0; c < d; ++c) {
            (*grad_w)[c] = (*grad_w)[c] / static_cast<double>(n) + lambda * w[c];
        }
        *grad_b /= static_cast<double>(n);
    }
    return loss;
}

}  // namespace internal

std::unique_ptr<TrainedDetector> fit_logistic(
    const numkit::Matrix& x, const std::vector<io::WindowLabel>& y,
    const LogisticHp& hp, std::uint64_t seed) {
    if (hp.l2_lambda < 0.0)
        throw std::invalid_argument("fit_logistic: l2_lambda must be >= 0");
    if (x.rows() == 0) throw std::invalid_argument("fit_logistic: empty matrix");
    const auto y01 = detail::to_y01(y, x.rows(), true);
    auto scaler = numkit::fit_standardizer(x);
    const auto xs = scaler.apply(x);

    const std::size_t d = xs.cols();
    std::vector<double> w(d, 0.0);
    double b = 0.0;

    // Full-batch gradient descent with Armijo backtracking, run until the
    // gradient norm falls under tolerance or the epoch cap is hit.
    std::vector<double> gw;
    double gb = 0.0;
    double loss = internal::logistic_loss_grad(xs, y01, w, b, hp.l2_lambda,
                                               &gw, &gb);
    for (int epoch = 0; epoch < hp.max_epochs; ++epoch) {
        double gnorm2 = gb * gb;
        for (double g : gw) gnorm2 += g * g;
        if (std::sqrt(gnorm2) <= hp.grad_tolerance) break;

        double step = 1.0;
        std::vector<double> w_try(d);
        double b_try = 0.0;
        bool accepted = false;
        for (int halving = 0; halving < 40; ++halving) {
            for (std::size_t c = 0; c < d; ++c) w_try[c] = w[c] - step * gw[c];
            b_try = b - step * gb;
            const double trial = internal::logistic_loss_grad(
                xs, y01, w_try, b_try, hp.l2_lambda, nullptr, nullptr);
            if (trial <= loss - 1e-4 * step * gnorm2) {
                w = w_try;
                b = b_try;
                loss = trial;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;  // no descent direction at fp resolution
        loss = internal::logistic_loss_grad(xs, y01, w, b, hp.l2_lambda, &gw,
                                            &gb);
    }

    return std::make_unique<LogisticDetector>(std::move(scaler), seed, hp,
                                              std::move(w), b);
}

namespace detail {

std::unique_ptr<TrainedDetector> logistic_from_json(const nlohmann::json& doc) {
    auto hp = std::get<LogisticHp>(hyperparams_from_json(
        Algorithm::LogisticRegression, doc.at("hyperparameters")));
    const auto& p = doc.at("params");
    return std::make_unique<LogisticDetector>(
        read_standardizer(doc), doc.value("seed", std::uint64_t{0}), hp,
        p.at("weights").get<std::vector<double>>(), p.at("bias").get<double>());
}

}  // namespace detail
}  // namespace eda::detectors
