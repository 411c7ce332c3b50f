#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cloudret/errors.hpp"

namespace cloudret {

using Shape = std::vector<int>;

std::size_t shape_size(const Shape& s);
std::string shape_str(const Shape& s);

namespace detail {
struct TensorData {
    Shape shape;
    std::vector<double> values;
    std::vector<double> grad;  // empty until backward populates it
    bool requires_grad = false;
};
}  // namespace detail

/// Rank-N array of 64-bit floats, row-major. Cheap shared handle: copies
/// alias the same storage. The optional grad buffer lives alongside the
/// values and is filled by Graph::backward.
class Tensor {
  public:
    Tensor() = default;

    static Tensor zeros(Shape shape, bool requires_grad = false);
    static Tensor full(Shape shape, double v, bool requires_grad = false);
    static Tensor from_values(Shape shape, std::vector<double> values,
                              bool requires_grad = false);
    static Tensor scalar(double v);

    bool defined() const { return static_cast<bool>(d_); }
    const Shape& shape() const { return d_->shape; }
    int rank() const { return static_cast<int>(d_->shape.size()); }
    std::size_t size() const { return d_->values.size(); }

    double* data() { return d_->values.data(); }
    const double* data() const { return d_->values.data(); }
    std::vector<double>& values() { return d_->values; }
    const std::vector<double>& values() const { return d_->values; }

    /// Scalar read; throws ContractError unless size() == 1.
    double item() const;

    bool requires_grad() const { return d_->requires_grad; }
    void set_requires_grad(bool b) { d_->requires_grad = b; }

    bool has_grad() const { return !d_->grad.empty(); }
    const std::vector<double>& grad() const;
    /// Grad buffer, zero-allocated on first use.
    std::vector<double>& grad_buffer();
    /// Grad buffer if already allocated, else nullptr.
    const std::vector<double>* maybe_grad() const;
    void clear_grad() { d_->grad.clear(); }

    bool same_storage(const Tensor& o) const { return d_ == o.d_; }

  private:
    std::shared_ptr<detail::TensorData> d_;
};

enum class OpKind {
    add,
    sub,
    mul,
    scalar_mul,
    relu,
    sigmoid,
    exp,
    log,
    sum,
    conv2d,
    maxpool2,
    tconv2,
    dense,
    concat,
    slice,
    channel_avg_pool,
    channel_max_pool,
};

/// Define-by-run tape. Ops append nodes in creation order, which is also
/// topological order; backward replays the nodes in exact reverse order,
/// accumulating (+=) into the grad buffers of requires_grad tensors.
///
/// A Graph and the tensors it produced belong to one worker at a time.
/// Distinct workers may run distinct graphs concurrently over shared
/// read-only parameters.
class Graph {
  public:
    // Elementwise binary ops. Shapes must match, or one operand must
    // broadcast: size-1, or its shape a leading prefix of the other's
    // (channel-wise broadcast, e.g. [C] against [C,H,W]).
    Tensor add(const Tensor& a, const Tensor& b);
    Tensor sub(const Tensor& a, const Tensor& b);
    Tensor mul(const Tensor& a, const Tensor& b);

    Tensor scalar_mul(const Tensor& a, double s);
    Tensor relu(const Tensor& a);
    Tensor sigmoid(const Tensor& a);
    Tensor exp(const Tensor& a);
    Tensor log(const Tensor& a);

    /// Full reduction to a [1] scalar.
    Tensor sum(const Tensor& a);

    /// Reverse sweep from a scalar loss. Seeds d(loss)/d(loss) = 1 and
    /// visits every node in reverse creation order.
    void backward(const Tensor& loss);

    std::size_t node_count() const { return nodes_.size(); }

    /// Appends a custom node (used by the layer library). `bwd` must
    /// accumulate into input grads given the output's grad buffer.
    Tensor record(OpKind kind, Tensor out, std::function<void()> bwd);

  private:
    struct Node {
        OpKind kind;
        std::function<void()> backward;
    };
    std::vector<Node> nodes_;

    Tensor binary_op(OpKind kind, const Tensor& a, const Tensor& b);
    Tensor unary_op(OpKind kind, const Tensor& a);
};

}  // namespace cloudret
