use num_bigint::BigInt;
use num_traits::One;

use super::Rational;
use crate::error::{Error, Result};

/// Bernoulli numbers `B_0..=B_n` with the `B_1 = -1/2` convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn new(n: usize) -> Self {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
        let mut values: Vec<Rational> = Vec::with_capacity(n + 1);
        values.push(Rational::one());
        for m in 1..=n {
            let row = binomial_row(m + 1);
            let acc: Rational = values
                .iter()
                .enumerate()
                .map(|(k, b)| Rational::from(row[k].clone()) * b)
                .sum();
            values.push(-acc / Rational::from(row[m].clone()));
        }
        BernoulliTable { values }
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `B_n(x) = sum_k C(n,k) B_k x^{n-k}`.
    pub fn polynomial(&self, n: usize, x: &Rational) -> Rational {
        let row = binomial_row(n);
        let mut acc = Rational::zero();
        let mut xp = Rational::one();
        for k in (0..=n).rev() {
            acc += Rational::from(row[k].clone()) * &self.values[k] * &xp;
            xp *= x;
        }
        acc
    }
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one(); n + 1];
    for k in 1..n {
        row[k] = &row[k - 1] * BigInt::from(n - k + 1) / BigInt::from(k);
    }
    row
}

/// Hurwitz zeta at a non-positive integer: `zeta(-n, a) = -B_{n+1}(a) / (n+1)`.
pub fn hurwitz_nonpositive(n: usize, a: &Rational) -> Result<Rational> {
    if !a.is_positive() {
        return Err(Error::Domain(format!("Hurwitz zeta needs a > 0, got {a}")));
    }
    let table = BernoulliTable::new(n + 1);
    Ok(-table.polynomial(n + 1, a) / Rational::from((n + 1) as u64))
}

/// Riemann zeta at a non-positive integer, `zeta(-n) = zeta(-n, 1)`.
pub fn zeta_nonpositive(n: usize) -> Rational {
    hurwitz_nonpositive(n, &Rational::one()).expect("a = 1 is in the domain")
}
