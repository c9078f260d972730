use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::{effective_working_digits, Real};

/// Outcome of a tail-bounded summation.
#[derive(Debug, Clone)]
pub struct SeriesResult<T> {
    pub value: HpComplex<T>,
    pub terms_used: u64,
    pub tail_bound: T,
}

/// Neumaier-compensated accumulator for one real component.
#[derive(Clone)]
struct Compensated<T> {
    sum: T,
    comp: T,
}

impl<T: Real> Compensated<T> {
    fn new(ctx: &PrecisionContext) -> Self {
        Compensated {
            sum: T::zero(ctx),
            comp: T::zero(ctx),
        }
    }

    fn add(&mut self, x: T) {
        let t = self.sum.clone() + &x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum.clone() - &t) + x;
        } else {
            self.comp += (x - &t) + &self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> T {
        self.sum.clone() + &self.comp
    }
}

/// Sum `term(n)` for `n = start, start+1, …` until the bound on the remaining tail
/// drops below `10^-digits · max(1, |partial sum|)`.
///
/// `tail_bound(n)` must bound `|Σ_{k ≥ n} term(k)|` and decrease with `n`.
pub fn sum_series<T, F, B>(start: u64, mut term: F, mut tail_bound: B, ctx: &PrecisionContext) -> Result<SeriesResult<T>>
where
    T: Real,
    F: FnMut(u64) -> HpComplex<T>,
    B: FnMut(u64) -> T,
{
    let eps = T::pow10(-(effective_working_digits::<T>(ctx) as i32), ctx);
    let one = T::one(ctx);
    let mut re = Compensated::<T>::new(ctx);
    let mut im = Compensated::<T>::new(ctx);
    let mut n = start;
    let mut used = 0u64;
    loop {
        let t = term(n);
        if !t.is_finite() {
            return Err(Error::NonFinite("series term"));
        }
        re.add(t.re);
        im.add(t.im);
        used += 1;
        n += 1;
        let bound = tail_bound(n);
        let partial = HpComplex::new(re.value(), im.value());
        let scale = T::max_of(&one, &partial.max_abs());
        if bound <= eps.clone() * &scale {
            return Ok(SeriesResult {
                value: partial,
                terms_used: used,
                tail_bound: bound.abs(),
            });
        }
        if used >= ctx.max_terms() {
            return Err(Error::NonConvergence {
                what: "series",
                terms: used,
                partial: partial.to_sci_string(20),
                tail_bound: bound.to_sci_string(6),
            });
        }
    }
}
