#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace uqg {

// Elements are encoded as the integer sum c_i p^i of their coefficient vector.
using Elem = uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

struct FieldElem {
    uint32_t ctx = 0;
    Elem code = 0;

    bool operator==(const FieldElem&) const = default;
    std::vector<uint32_t> coeffs() const;
};

struct FieldElemHash {
    size_t operator()(const FieldElem& e) const noexcept {
        return (static_cast<size_t>(e.ctx) << 32) ^ e.code;
    }
};

/// GF(p^k) in a polynomial basis. Immutable once built; fields up to 2^20
/// elements get log/antilog tables, fields up to 1024 elements get full
/// addition and multiplication tables.
class Field {
public:
    static FieldPtr make(uint32_t p, uint32_t k);
    static FieldPtr with_modulus(uint32_t p, const std::vector<uint32_t>& modulus);
    static FieldPtr by_id(uint32_t id);

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint64_t size() const { return size_; }
    uint32_t id() const { return id_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }
    bool tabled() const { return tabled_; }

    Elem from_int(int64_t v) const;
    Elem from_coeffs(const std::vector<uint32_t>& c) const;
    std::vector<uint32_t> coeffs(Elem a) const;
    FieldElem wrap(Elem a) const { return {id_, a}; }
    Elem unwrap(const FieldElem& a) const;

    Elem add(Elem a, Elem b) const {
        if (full_) return add_tab_[static_cast<size_t>(a) * size_ + b];
        if (p_ == 2) return a ^ b;
        if (tabled_) return add_zech(a, b);
        return add_slow(a, b);
    }
    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        if (tabled_) return neg_tab_[a];
        return neg_slow(a);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (full_) return mul_tab_[static_cast<size_t>(a) * size_ + b];
        if (tabled_) return (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]];
        return mul_slow(a, b);
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, uint64_t e) const;
    /// a^(p^j)
    Elem frobenius(Elem a, uint32_t j) const;

    Elem generator() const;
    Elem primitive() const { return prim_; }
    uint64_t mult_order(Elem a) const;
    /// Discrete log with respect to primitive(); table fields only.
    uint32_t log(Elem a) const;
    Elem exp(uint64_t n) const;

private:
    Field(uint32_t p, std::vector<uint32_t> modulus, uint32_t id);

    Elem add_slow(Elem a, Elem b) const;
    Elem neg_slow(Elem a) const;
    Elem mul_slow(Elem a, Elem b) const;
    Elem pow_slow(Elem a, uint64_t e) const;
    Elem add_zech(Elem a, Elem b) const;
    void build_tables();

    uint32_t p_, k_, id_;
    uint64_t size_;
    std::vector<uint32_t> mod_;
    std::vector<uint64_t> pw_;
    bool tabled_ = false, full_ = false;
    std::vector<uint32_t> exp_, log_, zech_, neg_tab_;
    std::vector<uint16_t> add_tab_, mul_tab_;
    std::vector<uint64_t> order_primes_;
    Elem prim_ = 1;
};

/// Canonical modulus of GF(p^k): the monic irreducible whose lower
/// coefficients have the smallest code sum a_i p^i.
std::vector<uint32_t> canonical_modulus(uint32_t p, uint32_t k);
bool irreducible_mod_p(uint32_t p, const std::vector<uint32_t>& monic);

// Element-level operations on tagged values.
FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem sub(const FieldElem& a, const FieldElem& b);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem div(const FieldElem& a, const FieldElem& b);
FieldElem pow(const FieldElem& a, uint64_t e);
FieldElem frobenius(const FieldElem& a, uint32_t j);
uint64_t mult_order(const FieldElem& a);

/// Ring embedding GF(p^s) -> GF(p^t), s | t, fixed by the image of the
/// canonical generator. Cached per pair and safe to share across threads.
class Embedding {
public:
    static std::shared_ptr<const Embedding> get(const FieldPtr& sub, const FieldPtr& sup);

    const FieldPtr& sub() const { return sub_; }
    const FieldPtr& sup() const { return sup_; }
    Elem generator_image() const { return gen_image_; }
    Elem map(Elem a) const;
    /// Inverse image for elements of the subfield, nothing otherwise.
    std::optional<Elem> preimage(Elem b) const;

    Embedding(FieldPtr sub, FieldPtr sup);

private:
    FieldPtr sub_, sup_;
    Elem gen_image_ = 0;
    std::vector<Elem> table_;
    std::unordered_map<Elem, Elem> back_;
};

FieldElem embed(const FieldPtr& sub, const FieldPtr& sup, const FieldElem& a);

}  // namespace uqg
