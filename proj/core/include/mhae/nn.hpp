#pragma once

#include <random>
#include <string>
#include <vector>

#include "mhae/matrix.hpp"

namespace mhae {

enum class Activation { Sigmoid, Relu, Identity };

const char* activation_name(Activation a);
Activation activation_from_name(const std::string& name);

double sigmoid(double x);

/// Gradients of one dense layer for a given upstream gradient.
struct DenseGrads {
    Matrix input;    // dL/dx, batch x in_dim
    Matrix weights;  // dL/dW, in_dim x out_dim
    Matrix bias;     // dL/db, 1 x out_dim
};

/// Fully connected layer: activation(x*W + b), bias broadcast per row.
/// forward() caches the input batch and pre-activation; backward() consumes
/// the cache and may only be called after a matching forward().
struct DenseLayer {
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    Activation activation = Activation::Sigmoid;
    Matrix weights;  // in_dim x out_dim
    Matrix bias;     // 1 x out_dim

    Matrix cached_input;
    Matrix cached_preact;
    bool has_cache = false;

    DenseLayer() = default;
    DenseLayer(std::size_t in, std::size_t out, Activation act);

    /// Glorot uniform init in +-sqrt(6/(in+out)); bias zero.
    void init_glorot(std::mt19937_64& rng);

    Matrix forward(const Matrix& x);
    DenseGrads backward(const Matrix& upstream_grad);
};

/// Mean over all elements of squared differences.
double mse(const Matrix& x, const Matrix& x_hat);

/// Derivative of mse w.r.t. x_hat: 2*(x_hat - x)/element_count.
Matrix mse_grad(const Matrix& x, const Matrix& x_hat);

/// Row-wise MSE: one mean-squared-error value per sample (matrix row).
std::vector<double> per_sample_mse(const Matrix& x, const Matrix& x_hat);

/// Adam accumulators for one parameter matrix.
struct AdamState {
    Matrix m, v;  // first/second moment, zero-initialized, parameter-shaped
    long t = 0;
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;

    AdamState() = default;
    AdamState(std::size_t rows, std::size_t cols, double learning_rate = 1e-3)
        : m(rows, cols), v(rows, cols), lr(learning_rate) {}
};

/// Standard Adam update with bias correction; increments state.t by one.
void adam_step(Matrix& params, const Matrix& grads, AdamState& state);

// Layer-stack helpers shared by the model and the gradient checker.
Matrix stack_forward(std::vector<DenseLayer>& stack, const Matrix& x);

/// Backward through the whole stack; grads[i] belongs to stack[i].
/// Returns via grads; grads.front().input is the gradient w.r.t. the input.
std::vector<DenseGrads> stack_backward(std::vector<DenseLayer>& stack,
                                       const Matrix& upstream_grad);

/// Max over all parameters of |analytic - numeric| / max(|analytic|, |numeric|, 1e-8),
/// where numeric is the central finite difference (step h) of mse(target, forward(x)).
double gradcheck(std::vector<DenseLayer>& stack, const Matrix& x,
                 const Matrix& target, double h = 1e-5);

/// Same comparison against caller-supplied analytic gradients (index-aligned
/// with the stack); lets tests probe the harness with corrupted gradients.
double gradcheck(std::vector<DenseLayer>& stack, const Matrix& x,
                 const Matrix& target, const std::vector<DenseGrads>& analytic,
                 double h = 1e-5);

}  // namespace mhae
