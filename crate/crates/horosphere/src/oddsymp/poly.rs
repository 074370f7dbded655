//! Sparse weighted polynomials in `q, tau'_1, ..., tau'_K` over the rationals.
//!
//! Variable 0 is `q`, variable `p >= 1` is `tau'_p`. Monomials are ordered by
//! weighted degree, ties broken reverse-lexicographically with
//! `q < tau'_1 < ... < tau'_K`.

use crate::exact::Q;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Maximal number of variables, `q` included.
pub const MAX_VARS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub degree: u32,
    pub exps: [u16; MAX_VARS],
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for v in 0..MAX_VARS {
                match self.exps[v].cmp(&other.exps[v]) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial { degree: 0, exps: [0; MAX_VARS] };

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.exps;
        for (a, b) in e.iter_mut().zip(&other.exps) {
            *a += b;
        }
        Monomial { degree: self.degree + other.degree, exps: e }
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut e = self.exps;
        for (a, b) in e.iter_mut().zip(&other.exps) {
            *a -= b;
        }
        Monomial { degree: self.degree - other.degree, exps: e }
    }

    pub fn lcm(&self, other: &Monomial, ring: &PolyRing) -> Monomial {
        let mut e = self.exps;
        for (a, b) in e.iter_mut().zip(&other.exps) {
            *a = (*a).max(*b);
        }
        ring.monomial(e)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn q_exp(&self) -> u16 {
        self.exps[0]
    }
}

/// Variable names and weights of `Q[q, tau'_1, ..., tau'_K]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub k: usize,
    pub q_degree: u32,
}

impl PolyRing {
    pub fn new(k: usize, q_degree: u32) -> Self {
        assert!(k < MAX_VARS, "at most {} generators", MAX_VARS - 1);
        PolyRing { k, q_degree }
    }

    pub fn weight(&self, v: usize) -> u32 {
        if v == 0 {
            self.q_degree
        } else {
            v as u32
        }
    }

    pub fn monomial(&self, exps: [u16; MAX_VARS]) -> Monomial {
        let degree = (0..=self.k).map(|v| self.weight(v) * exps[v] as u32).sum();
        Monomial { degree, exps }
    }

    pub fn var_name(&self, v: usize) -> String {
        if v == 0 {
            "q".into()
        } else {
            format!("tau'_{v}")
        }
    }

    pub fn zero(&self) -> QPolynomial {
        QPolynomial::default()
    }

    pub fn constant(&self, c: Q) -> QPolynomial {
        QPolynomial::from_terms([(Monomial::ONE, c)])
    }

    pub fn one(&self) -> QPolynomial {
        self.constant(Q::one())
    }

    pub fn q(&self) -> QPolynomial {
        self.var(0)
    }

    /// `tau'_p` with the truncation convention `tau'_0 = 1`, `tau'_p = 0` outside `0..=K`.
    pub fn tau(&self, p: i64) -> QPolynomial {
        match p {
            0 => self.one(),
            p if p < 0 || p as usize > self.k => self.zero(),
            p => self.var(p as usize),
        }
    }

    pub fn var(&self, v: usize) -> QPolynomial {
        let mut e = [0; MAX_VARS];
        e[v] = 1;
        QPolynomial::from_terms([(self.monomial(e), Q::one())])
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = (1..=self.k)
            .chain([0])
            .filter(|&v| m.exps[v] > 0)
            .map(|v| match m.exps[v] {
                1 => self.var_name(v),
                e => format!("{}^{e}", self.var_name(v)),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn format(&self, f: &QPolynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in f.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                s += if neg { " - " } else { " + " };
            } else if neg {
                s.push('-');
            }
            let a = c.abs();
            if *m == Monomial::ONE {
                s += &a.to_string();
            } else if a.is_one() {
                s += &self.format_monomial(m);
            } else {
                s += &format!("{a}*{}", self.format_monomial(m));
            }
        }
        s
    }
}

/// Polynomial as a sorted map from monomials to nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QPolynomial {
    pub terms: BTreeMap<Monomial, Q>,
}

impl QPolynomial {
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = QPolynomial::default();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.last_key_value()
    }

    pub fn add(&self, other: &QPolynomial) -> QPolynomial {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn sub(&self, other: &QPolynomial) -> QPolynomial {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(*m, -c);
        }
        r
    }

    pub fn scale(&self, c: &Q) -> QPolynomial {
        if c.is_zero() {
            return QPolynomial::default();
        }
        QPolynomial { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Q) -> QPolynomial {
        QPolynomial { terms: self.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect() }
    }

    pub fn mul(&self, other: &QPolynomial) -> QPolynomial {
        let mut r = QPolynomial::default();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                r.add_term(a.mul(b), x * y);
            }
        }
        r
    }

    pub fn pow(&self, e: u32, ring: &PolyRing) -> QPolynomial {
        (0..e).fold(ring.one(), |acc, _| acc.mul(self))
    }

    pub fn monic(&self) -> QPolynomial {
        match self.leading() {
            Some((_, c)) => self.scale(&(Q::one() / c)),
            None => self.clone(),
        }
    }

    /// Weighted degree if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Substitute `q = value`.
    pub fn eval_q(&self, value: &Q, ring: &PolyRing) -> QPolynomial {
        let mut r = QPolynomial::default();
        for (m, c) in &self.terms {
            let mut e = m.exps;
            let k = e[0];
            e[0] = 0;
            let mut f = c.clone();
            for _ in 0..k {
                f *= value;
            }
            r.add_term(ring.monomial(e), f);
        }
        r
    }

    /// Coefficients of the powers of `q`, as polynomials in the `tau'` variables.
    pub fn q_layers(&self, ring: &PolyRing) -> Vec<QPolynomial> {
        let top = self.terms.keys().map(|m| m.q_exp()).max().unwrap_or(0) as usize;
        let mut out = vec![QPolynomial::default(); top + 1];
        for (m, c) in &self.terms {
            let mut e = m.exps;
            let k = e[0] as usize;
            e[0] = 0;
            out[k].add_term(ring.monomial(e), c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q_int;

    #[test]
    fn order_is_graded_reverse_lex() {
        let r = PolyRing::new(4, 5);
        let t1 = r.var(1);
        let t2 = r.var(2);
        let q = r.q();
        let m = |p: &QPolynomial| *p.leading().unwrap().0;
        // same degree: fewer tau'_1 is larger
        assert!(m(&t2) > m(&t1.mul(&t1)));
        // q-free monomials beat q-monomials of the same degree
        assert!(m(&r.var(4).mul(&t1)) > m(&q));
        assert!(m(&t1) > Monomial::ONE);
    }

    #[test]
    fn arithmetic_and_format() {
        let r = PolyRing::new(3, 4);
        let d2 = r.var(1).mul(&r.var(1)).sub(&r.var(2));
        assert_eq!(r.format(&d2), "-tau'_2 + tau'_1^2");
        assert_eq!(d2.homogeneous_degree(), Some(2));
        assert!(d2.sub(&d2).is_zero());
        let f = r.q().mul(&r.var(1)).add(&r.one());
        assert!(!f.is_homogeneous());
        assert_eq!(r.format(&f.eval_q(&q_int(2), &r)), "2*tau'_1 + 1");
        assert_eq!(f.q_layers(&r).len(), 2);
        assert!(r.tau(-1).is_zero() && r.tau(4).is_zero());
        assert_eq!(r.tau(0), r.one());
    }
}
