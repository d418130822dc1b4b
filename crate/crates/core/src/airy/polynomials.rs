use crate::error::{Error, Result};

/// Largest `n` for which the coefficients of `P_n`, `Q_n` fit in `u128`.
pub const MAX_DERIVATIVE_ORDER: usize = 77;

/// Integer polynomials with `Ai^{(n)}(t) = P_n(t) Ai(t) + Q_n(t) Ai'(t)`.
///
/// Coefficients are stored in ascending degree; the zero polynomial is `[0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyPair {
    pub p_coeffs: Vec<u128>,
    pub q_coeffs: Vec<u128>,
}

fn trim(mut c: Vec<u128>) -> Vec<u128> {
    while c.len() > 1 && c[c.len() - 1] == 0 {
        c.pop();
    }
    c
}

fn derivative(c: &[u128]) -> Vec<u128> {
    if c.len() <= 1 {
        return vec![0];
    }
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &a)| a * i as u128)
        .collect()
}

fn add(a: &[u128], b: &[u128]) -> Vec<u128> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect()
}

fn shift(a: &[u128]) -> Vec<u128> {
    let mut out = Vec::with_capacity(a.len() + 1);
    out.push(0);
    out.extend_from_slice(a);
    out
}

/// `None` for the zero polynomial.
fn degree(c: &[u128]) -> Option<usize> {
    c.iter().rposition(|&a| a != 0)
}

fn eval(c: &[u128], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * t + a as f64)
}

impl PolyPair {
    pub fn p_degree(&self) -> Option<usize> {
        degree(&self.p_coeffs)
    }

    pub fn q_degree(&self) -> Option<usize> {
        degree(&self.q_coeffs)
    }

    pub fn eval_p(&self, t: f64) -> f64 {
        eval(&self.p_coeffs, t)
    }

    pub fn eval_q(&self, t: f64) -> f64 {
        eval(&self.q_coeffs, t)
    }

    /// `P_n(t) a + Q_n(t) a'` for a given `(Ai(t), Ai'(t))`.
    pub fn combine(&self, t: f64, ai: f64, ai_prime: f64) -> f64 {
        self.eval_p(t) * ai + self.eval_q(t) * ai_prime
    }
}

/// `P_n`, `Q_n` from `P_n = P'_{n-1} + t Q_{n-1}`, `Q_n = P_{n-1} + Q'_{n-1}`,
/// `P_0 = 1`, `Q_0 = 0`.
pub fn derivative_polynomials(n: usize) -> Result<PolyPair> {
    if n > MAX_DERIVATIVE_ORDER {
        return Err(Error::Domain(format!(
            "derivative order {n} exceeds {MAX_DERIVATIVE_ORDER}"
        )));
    }
    let mut p = vec![1u128];
    let mut q = vec![0u128];
    for _ in 0..n {
        let next_p = trim(add(&derivative(&p), &shift(&q)));
        let next_q = trim(add(&p, &derivative(&q)));
        p = next_p;
        q = next_q;
    }
    Ok(PolyPair {
        p_coeffs: p,
        q_coeffs: q,
    })
}
