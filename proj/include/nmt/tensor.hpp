#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nmt/common.hpp"
#include "nmt/rng.hpp"

namespace nmt {

using Shape = std::vector<size_t>;

std::string shape_str(const Shape& s);

// When enabled (set_check_finite or NMT_CHECK_FINITE=1), every op output is
// scanned for NaN/Inf and log() of non-positive values throws.
void set_check_finite(bool on);
bool check_finite_enabled();

class Tape;

struct TensorData {
  Shape shape;
  std::vector<double> values;
  bool requires_grad = false;
  std::vector<double> grad;  // lazily sized; empty means zero

  // Bookkeeping for the tape active when this tensor last participated.
  uint64_t tape_epoch = 0;
  int tape_node = -1;

  size_t size() const { return values.size(); }
};

// Dense row-major f64 tensor. Values are immutable once the tensor has been
// consumed by an op; parameters are mutated only between tapes (optimizer).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, double fill = 0.0);
  Tensor(Shape shape, std::vector<double> values);

  static Tensor scalar(double v);
  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
  static Tensor full(Shape shape, double v) { return Tensor(std::move(shape), v); }
  static Tensor uniform(Shape shape, Rng& rng, double lo, double hi);

  bool defined() const { return sd_ != nullptr; }
  const Shape& shape() const { return sd_->shape; }
  size_t rank() const { return sd_->shape.size(); }
  size_t dim(size_t i) const { return sd_->shape[i]; }
  size_t size() const { return sd_->values.size(); }

  double* data() { return sd_->values.data(); }
  const double* data() const { return sd_->values.data(); }
  std::vector<double>& values() { return sd_->values; }
  const std::vector<double>& values() const { return sd_->values; }

  double item() const;
  double operator()(size_t i) const { return sd_->values[i]; }
  double operator()(size_t i, size_t j) const {
    return sd_->values[i * sd_->shape[1] + j];
  }

  bool requires_grad() const { return sd_ && sd_->requires_grad; }
  Tensor& set_requires_grad(bool on) {
    sd_->requires_grad = on;
    return *this;
  }
  // Accumulated gradient; empty vector means zero everywhere.
  const std::vector<double>& grad() const { return sd_->grad; }
  std::vector<double>& grad_buffer() { return sd_->grad; }
  void zero_grad() { sd_->grad.clear(); }

  // Same values, no tape participation, no grad requirement.
  Tensor detach() const;
  // Deep copy (fresh storage).
  Tensor clone() const;

  std::shared_ptr<TensorData>& sd() { return sd_; }
  const std::shared_ptr<TensorData>& sd() const { return sd_; }

 private:
  std::shared_ptr<TensorData> sd_;
};

using BackwardFn = std::function<void(Tape&, const double* gout)>;

// Reverse-mode tape, one per training step, confined to a single thread.
// Nodes are appended in execution order, so reverse iteration is a valid
// topological order for backpropagation.
class Tape {
 public:
  Tape();
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  uint64_t epoch() const { return epoch_; }
  size_t node_count() const { return nodes_.size(); }

  int watch(const std::shared_ptr<TensorData>& leaf);
  int record(std::vector<int> parents, size_t out_size, BackwardFn fn);

  // Seeds d(root)/d(root)=1 and accumulates into every reachable leaf's grad.
  void backward(const Tensor& root);

  // Gradient accumulation buffer for a node, zero-initialized on first use.
  double* grad_for(int node);

 private:
  struct Node {
    std::vector<int> parents;
    BackwardFn fn;
    size_t size;
    std::shared_ptr<TensorData> leaf;  // set for watched leaves only
  };
  uint64_t epoch_;
  std::vector<Node> nodes_;
  std::vector<std::vector<double>> grads_;
};

// RAII activation of a tape on the current thread. Nesting is an error.
class TapeScope {
 public:
  explicit TapeScope(Tape& tape);
  ~TapeScope();
  TapeScope(const TapeScope&) = delete;
  TapeScope& operator=(const TapeScope&) = delete;
};

Tape* active_tape();

// ---- ops -------------------------------------------------------------
// Binary elementwise ops broadcast the second operand over the first's
// leading axes: shapes must be equal, or b's shape a trailing suffix of a's,
// or b a scalar.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);

Tensor neg(const Tensor& x);
Tensor scale(const Tensor& x, double c);
Tensor add_const(const Tensor& x, double c);

Tensor sigmoid(const Tensor& x);
Tensor tanh(const Tensor& x);
Tensor exp(const Tensor& x);
Tensor log(const Tensor& x);

// op(a)[m,k] * op(b)[k,n]. 1-D operands are treated as a row (a) or column
// (b) and the unit axis is squeezed from the result; ta/tb require 2-D.
Tensor matmul(const Tensor& a, const Tensor& b, bool ta = false,
              bool tb = false);
Tensor outer(const Tensor& a, const Tensor& b);

Tensor softmax(const Tensor& x, int axis = -1);
Tensor log_softmax(const Tensor& x, int axis = -1);

Tensor sum_all(const Tensor& x);
Tensor mean_all(const Tensor& x);
Tensor sum_last(const Tensor& x);    // [m,n] -> [m]
Tensor mean_rows(const Tensor& x);   // [m,n] -> [n]

Tensor concat(std::span<const Tensor> parts);           // 1-D pieces -> 1-D
Tensor stack_rows(std::span<const Tensor> rows);        // m x [d] -> [m,d]
Tensor slice_last(const Tensor& x, size_t start, size_t len);
Tensor slice_rows(const Tensor& x, size_t start, size_t len);
Tensor row(const Tensor& x, size_t i);                  // [m,d] -> [d]
Tensor take_at(const Tensor& x, std::span<const int> ids);  // [m,V] -> [m]
Tensor reverse_rows(const Tensor& x);
Tensor reshape(const Tensor& x, Shape shape);

// Inverted dropout; identity when !training or p == 0.
Tensor dropout(const Tensor& x, double p, Rng& rng, bool training);

void backward(const Tensor& loss);

// Scales every grad buffer by max_norm/g when the global L2 norm g exceeds
// max_norm. Returns the scale applied (1.0 when unchanged).
double clip_global_norm(std::span<Tensor> params, double max_norm);

}  // namespace nmt
