#pragma once

#include "curvechi/rational.hpp"
#include "curvechi/symfunc.hpp"

namespace curvechi {

// Minimal ring interface used by the series layer, as overload sets so the
// same templates run over Rat, SymFunc, CPoly<R> and nestings thereof.

inline Rat ring_zero_like(const Rat&) { return Rat(0); }
inline Rat ring_one_like(const Rat&) { return Rat(1); }
inline bool ring_is_zero(const Rat& a) { return a == 0; }
inline void ring_add_assign(Rat& a, const Rat& b) { a += b; }
inline void ring_sub_assign(Rat& a, const Rat& b) { a -= b; }
inline Rat ring_mul(const Rat& a, const Rat& b) { return a * b; }
inline void ring_scale(Rat& a, const Rat& c) { a *= c; }
inline void ring_axpy(Rat& acc, const Rat& c, const Rat& x) { acc += c * x; }
inline Rat ring_neg(const Rat& a) { return -a; }

inline SymFunc ring_zero_like(const SymFunc& a) { return SymFunc::zero(a.p_cap()); }
inline SymFunc ring_one_like(const SymFunc& a) { return SymFunc::constant(Rat(1), a.p_cap()); }
inline bool ring_is_zero(const SymFunc& a) { return a.is_zero(); }
inline void ring_add_assign(SymFunc& a, const SymFunc& b) { a += b; }
inline void ring_sub_assign(SymFunc& a, const SymFunc& b) { a -= b; }
inline SymFunc ring_mul(const SymFunc& a, const SymFunc& b) { return a * b; }
inline void ring_scale(SymFunc& a, const Rat& c) { a.scale(c); }
inline void ring_axpy(SymFunc& acc, const Rat& c, const SymFunc& x) { acc.axpy(c, x); }
inline SymFunc ring_neg(const SymFunc& a) { return -a; }

} // namespace curvechi
