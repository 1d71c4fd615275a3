#pragma once

#include <memory>
#include <string>
#include <utility>

#include "qleig/errors.hpp"
#include "qleig/qmatrix.hpp"
#include "qleig/quaternion.hpp"

namespace qleig {

// Expression tree over the quaternions in one noncommutative variable.
// Nodes are immutable and shared; there is deliberately no simplification
// pass, because over a noncommutative ring even x * x^-1 = 1 is only valid
// where x is invertible, and reassociating products can change nothing but
// still hide which factor blew up. What you build is what gets evaluated.
class NCExpr {
public:
    enum class Kind { Const, Var, Add, Mul, Inv };

    static NCExpr constant(const Quaternion& q) {
        return NCExpr(std::make_shared<Node>(Node{Kind::Const, q, nullptr, nullptr}));
    }
    static NCExpr variable() {
        return NCExpr(std::make_shared<Node>(Node{Kind::Var, {}, nullptr, nullptr}));
    }

    Kind kind() const { return node_->kind; }

    const Quaternion& const_value() const {
        if (node_->kind != Kind::Const)
            throw UnsupportedError("const_value() called on a non-constant node");
        return node_->value;
    }

    NCExpr left() const { return NCExpr(node_->a); }
    NCExpr right() const { return NCExpr(node_->b); }

    friend NCExpr operator+(const NCExpr& a, const NCExpr& b) {
        return NCExpr(std::make_shared<Node>(Node{Kind::Add, {}, a.node_, b.node_}));
    }
    friend NCExpr operator*(const NCExpr& a, const NCExpr& b) {
        return NCExpr(std::make_shared<Node>(Node{Kind::Mul, {}, a.node_, b.node_}));
    }
    friend NCExpr inv(const NCExpr& a) {
        return NCExpr(std::make_shared<Node>(Node{Kind::Inv, {}, a.node_, nullptr}));
    }

    NCExpr operator-() const { return constant(Quaternion::real(-1.0)) * *this; }
    friend NCExpr operator-(const NCExpr& a, const NCExpr& b) { return a + (-b); }

    bool is_polynomial() const { return poly(node_.get()); }

    // Evaluation at a quaternion point. An Inv node whose child evaluates
    // to exactly zero raises SingularAt; near-zero values are let through,
    // poles are the caller's business (see the characteristic functions).
    Quaternion eval(const Quaternion& lambda) const { return eval_q(node_.get(), lambda); }

    // Evaluation at a square quaternionic matrix: constants become scalar
    // multiples of the identity, Inv becomes matrix inversion.
    QMatrix eval(const QMatrix& arg) const { return eval_m(node_.get(), arg); }

    std::string to_string() const { return print(node_.get()); }

private:
    struct Node {
        Kind kind;
        Quaternion value;
        std::shared_ptr<const Node> a;
        std::shared_ptr<const Node> b;
    };

    explicit NCExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {
        if (!node_) throw UnsupportedError("expression node is empty");
    }

    static bool poly(const Node* n) {
        switch (n->kind) {
            case Kind::Const:
            case Kind::Var: return true;
            case Kind::Inv: return false;
            default: return poly(n->a.get()) && poly(n->b.get());
        }
    }

    static Quaternion eval_q(const Node* n, const Quaternion& lambda) {
        switch (n->kind) {
            case Kind::Const: return n->value;
            case Kind::Var: return lambda;
            case Kind::Add: return eval_q(n->a.get(), lambda) + eval_q(n->b.get(), lambda);
            case Kind::Mul: return eval_q(n->a.get(), lambda) * eval_q(n->b.get(), lambda);
            default: {
                Quaternion inner = eval_q(n->a.get(), lambda);
                if (inner.is_zero())
                    throw SingularAtError("inverse of zero while evaluating at " +
                                          format_quaternion(lambda));
                return inverse(inner);
            }
        }
    }

    static QMatrix eval_m(const Node* n, const QMatrix& arg) {
        switch (n->kind) {
            case Kind::Const: return n->value * QMatrix::identity(arg.size());
            case Kind::Var: return arg;
            case Kind::Add: return eval_m(n->a.get(), arg) + eval_m(n->b.get(), arg);
            case Kind::Mul: return eval_m(n->a.get(), arg) * eval_m(n->b.get(), arg);
            default: {
                QMatrix inner = eval_m(n->a.get(), arg);
                try {
                    return inverse(inner);
                } catch (const SingularError& e) {
                    throw SingularMatrixError(
                        std::string("inner matrix is singular during matrix evaluation: ") +
                        e.what());
                }
            }
        }
    }

    static std::string print(const Node* n) {
        switch (n->kind) {
            case Kind::Const: return "(" + format_quaternion(n->value) + ")";
            case Kind::Var: return "x";
            case Kind::Add: return "(" + print(n->a.get()) + " + " + print(n->b.get()) + ")";
            case Kind::Mul: return "(" + print(n->a.get()) + " * " + print(n->b.get()) + ")";
            default: return "inv(" + print(n->a.get()) + ")";
        }
    }

    std::shared_ptr<const Node> node_;
};

// The ubiquitous building block (q - x).
inline NCExpr linear_factor(const Quaternion& q) {
    return NCExpr::constant(q) - NCExpr::variable();
}

}  // namespace qleig
