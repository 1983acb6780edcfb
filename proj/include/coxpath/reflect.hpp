#pragma once

#include "coxpath/quotient.hpp"

namespace coxpath {

/* Reflection actions of W on the quotient ring viewed as its own (left and
 * right) regular module.  On generators, with m_{r,s} >= 3:
 *
 *   reflect_left:   s.[s] = -[s],  s.[r] = [r] + [rs]
 *   reflect_right:  [s].s = -[s],  [r].s = [r] + [sr]
 *
 * Both are one-sided multiplications: the left action commutes with left
 * multiplication, so it acts at the right end of every path, and vice versa. */

using Word = std::vector<int>; // generator indices, leftmost letter first

enum class Side { Left, Right };

/* <alpha_r, alphacheck_s>: 2[r] if r = s, -[rs] if m_{r,s} >= 3, else 0. */
QElement pairing_generator(const QuotientRing& ring, int r, int s,
                           Domain d = Domain::Rationals);

QElement reflect_left(const QuotientRing& ring, int s, const QElement& m);
QElement reflect_right(const QuotientRing& ring, const QElement& m, int s);

/* Left side folds the word right-to-left (w1.(w2.(...x))), right side folds
 * left-to-right ((x.w1).w2...). */
QElement act_word(const QuotientRing& ring, const Word& w, const QElement& x, Side side);

/* R'-bilinear pairing of the left-module copy with the right-module copy:
 * <x [r], [s] y> = x <alpha_r, alphacheck_s> y, summed over components.
 * Invariant under the diagonal W-action, where w acts on the first slot by
 * act_word(w, -, Left) and on the second through the right-module structure,
 * i.e. by act_word(reverse(w), -, Right) (generators are involutions, so the
 * reversed word is the inverse). */
QElement pairing(const QuotientRing& ring, const QElement& m, const QElement& mcheck);

} // namespace coxpath
