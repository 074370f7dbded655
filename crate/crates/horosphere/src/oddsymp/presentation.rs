//! Classical and quantum presentations of the cohomology of `IG(m, 2n+1)`
//! as quotients of `Q[q, tau'_1, ..., tau'_{2n+1-m}]`.

use super::groebner::{groebner_basis, normal_form, standard_monomials};
use super::partitions::enumerate_index_sets;
use super::poly::{Monomial, PolyRing, QPolynomial, MAX_VARS};
use crate::error::{Error, Result};
use crate::exact::{characteristic_polynomial, minimal_polynomial, parse_rational, q_int, Matrix, UPoly, Q};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Parameters `(n, m)` with `2 <= m <= n`.
pub fn check_range(n: usize, m: usize) -> Result<()> {
    if n < 2 || m < 2 || m > n || 2 * n + 1 - m >= MAX_VARS {
        return Err(Error::InvalidParameters(format!("IG({m}, {}) needs 2 <= m <= n, n >= 2", 2 * n + 1)));
    }
    Ok(())
}

pub fn poly_ring(n: usize, m: usize) -> PolyRing {
    PolyRing::new(2 * n + 1 - m, (2 * n + 2 - m) as u32)
}

pub fn dim_ig(n: usize, m: usize) -> usize {
    m * (2 * n + 1 - m) - m * (m - 1) / 2
}

/// `d_0, ..., d_r` with `d_r = det(tau'_{1+j-i})_{1<=i,j<=r}`, by cofactor
/// expansion along the first row.
pub fn d_polys(r: usize, ring: &PolyRing) -> Vec<QPolynomial> {
    let mut d = vec![ring.one()];
    for s in 1..=r {
        let mut acc = ring.zero();
        for i in 1..=s {
            let t = ring.tau(i as i64).mul(&d[s - i]);
            acc = if i % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
        }
        d.push(acc);
    }
    d
}

pub fn d_poly(r: usize, ring: &PolyRing) -> QPolynomial {
    d_polys(r, ring).pop().unwrap()
}

/// `b_r = tau'_r^2 + 2 sum_{i>=1} (-1)^i tau'_{r+i} tau'_{r-i}`.
pub fn b_poly(r: usize, ring: &PolyRing) -> QPolynomial {
    let r = r as i64;
    let mut acc = ring.tau(r).mul(&ring.tau(r));
    for i in 1..=r {
        let t = ring.tau(r + i).mul(&ring.tau(r - i)).scale(&q_int(2));
        acc = if i % 2 == 1 { acc.sub(&t) } else { acc.add(&t) };
    }
    acc
}

/// Relation `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: QPolynomial,
    pub rhs: QPolynomial,
}

impl Relation {
    pub fn generator(&self) -> QPolynomial {
        self.lhs.sub(&self.rhs)
    }
}

fn relations(n: usize, m: usize, quantum: bool) -> Result<Vec<Relation>> {
    check_range(n, m)?;
    let ring = poly_ring(n, m);
    let top = 2 * n + 2 - m;
    let d = d_polys(top, &ring);
    let mut out = vec![];
    for (r, dr) in d.iter().enumerate().skip(m + 1) {
        let rhs = if quantum && r == top && m % 2 == 1 { ring.q().scale(&q_int(-1)) } else { ring.zero() };
        out.push(Relation { name: format!("d_{r}"), lhs: dr.clone(), rhs });
    }
    for s in n + 2 - m..=n {
        let rhs = if quantum {
            let sign = if (2 * n + 1 - m - s).is_multiple_of(2) { 1 } else { -1 };
            ring.q().mul(&ring.tau(2 * s as i64 - 2 * n as i64 - 2 + m as i64)).scale(&q_int(sign))
        } else {
            ring.zero()
        };
        out.push(Relation { name: format!("b_{s}"), lhs: b_poly(s, &ring), rhs });
    }
    Ok(out)
}

/// Relations `d_r = 0` (m+1 <= r <= 2n+2-m) and `b_s = 0` (n+2-m <= s <= n).
pub fn classical_ideal(n: usize, m: usize) -> Result<Vec<Relation>> {
    relations(n, m, false)
}

/// Quantum deformation: `d_{2n+2-m} = -q` for odd m, and
/// `b_s = (-1)^{2n+1-m-s} q tau'_{2s-2n-2+m}`.
pub fn quantum_ideal(n: usize, m: usize) -> Result<Vec<Relation>> {
    relations(n, m, true)
}

/// Quotient ring with its reduced Groebner basis.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub n: usize,
    pub m: usize,
    pub quantum: bool,
    pub ring: PolyRing,
    pub relations: Vec<Relation>,
    pub groebner_basis: Vec<QPolynomial>,
    /// Standard monomials free of `q`, sorted by the monomial order.
    pub monomial_basis: Vec<Monomial>,
}

fn tau_vars(ring: &PolyRing) -> Vec<usize> {
    (1..=ring.k).collect()
}

impl QuotientRing {
    pub fn classical(n: usize, m: usize) -> Result<Self> {
        Self::build(n, m, false)
    }

    pub fn quantum(n: usize, m: usize) -> Result<Self> {
        Self::build(n, m, true)
    }

    fn build(n: usize, m: usize, quantum: bool) -> Result<Self> {
        let relations = relations(n, m, quantum)?;
        let ring = poly_ring(n, m);
        let gens: Vec<QPolynomial> = relations.iter().map(Relation::generator).collect();
        let gb = groebner_basis(&gens, &ring);
        let bound = finite_degree_bound(&gb, &ring)
            .ok_or_else(|| Error::InvalidInput(format!("IG({m}, {}) quotient is not finite", 2 * n + 1)))?;
        let monomial_basis = standard_monomials(&gb, &ring, &tau_vars(&ring), bound);
        Ok(QuotientRing { n, m, quantum, ring, relations, groebner_basis: gb, monomial_basis })
    }

    pub fn normal_form(&self, f: &QPolynomial) -> QPolynomial {
        normal_form(f, &self.groebner_basis)
    }

    /// Number of `q`-free standard monomials: the dimension of the `q = 0` fiber,
    /// and the rank over `Q[q]` when [`Self::is_torsion_free`] holds.
    pub fn rank(&self) -> usize {
        self.monomial_basis.len()
    }

    /// Number of `q`-free standard monomials per weighted degree.
    pub fn hilbert_series(&self) -> Vec<usize> {
        let top = self.monomial_basis.iter().map(|m| m.degree as usize).max().unwrap_or(0);
        let mut h = vec![0; top + 1];
        for m in &self.monomial_basis {
            h[m.degree as usize] += 1;
        }
        h
    }

    /// `q` is a nonzerodivisor: no leading monomial of the reduced basis
    /// involves `q` (the order is reverse-lexicographic with `q` last).
    pub fn is_torsion_free(&self) -> bool {
        self.groebner_basis.iter().all(|g| g.leading().unwrap().0.q_exp() == 0)
    }

    /// Coefficient matrices (in powers of `q`) of multiplication by `f` on the
    /// monomial basis.
    pub fn multiplication_layers(&self, f: &QPolynomial) -> Result<Vec<Matrix>> {
        let n = self.rank();
        let index: BTreeMap<Monomial, usize> = self.monomial_basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut layers: Vec<Matrix> = vec![Matrix::zeros(n, n)];
        for (j, b) in self.monomial_basis.iter().enumerate() {
            let prod = self.normal_form(&f.mul_term(b, &Q::one()));
            for (k, layer) in prod.q_layers(&self.ring).into_iter().enumerate() {
                while layers.len() <= k {
                    layers.push(Matrix::zeros(n, n));
                }
                for (mono, c) in layer.terms {
                    let i = *index.get(&mono).ok_or_else(|| {
                        Error::InvalidInput("normal form leaves the q-free monomial basis".into())
                    })?;
                    layers[k][(i, j)] += c;
                }
            }
        }
        Ok(layers)
    }

    pub fn tau1_matrix(&self, q_value: &Q) -> Result<Matrix> {
        Ok(Matrix::from_layers(&self.multiplication_layers(&self.ring.tau(1))?, q_value))
    }

    pub fn minpoly_tau1(&self, q_value: &Q) -> Result<UPoly> {
        Ok(minimal_polynomial(&self.tau1_matrix(q_value)?))
    }

    pub fn charpoly_tau1(&self, q_value: &Q) -> Result<UPoly> {
        Ok(characteristic_polynomial(&self.tau1_matrix(q_value)?))
    }

    /// Dimension of the quotient after substituting `q = value`, from an
    /// independent Groebner basis in the `tau'` variables.
    pub fn specialized_rank(&self, value: &Q) -> Result<usize> {
        let gens: Vec<QPolynomial> =
            self.relations.iter().map(|r| r.generator().eval_q(value, &self.ring)).collect();
        let gb = groebner_basis(&gens, &self.ring);
        let bound = finite_degree_bound(&gb, &self.ring)
            .ok_or_else(|| Error::InvalidInput("specialized quotient is not finite".into()))?;
        Ok(standard_monomials(&gb, &self.ring, &tau_vars(&self.ring), bound).len())
    }

    pub fn flatness(&self) -> Result<FlatnessReport> {
        let classical = QuotientRing::classical(self.n, self.m)?;
        let index_sets = enumerate_index_sets(self.m, 2 * self.n + 1)?.len();
        let hilbert = classical.hilbert_series();
        let rev: Vec<usize> = hilbert.iter().rev().copied().collect();
        Ok(FlatnessReport {
            n: self.n,
            m: self.m,
            index_sets,
            rank_generic: self.rank(),
            rank_q0: classical.rank(),
            rank_q1: self.specialized_rank(&Q::one())?,
            torsion_free: self.is_torsion_free(),
            palindromic: hilbert == rev,
            hilbert_q0: hilbert,
        })
    }

    pub fn to_json(&self) -> PresentationJson {
        let mut generators: Vec<Generator> = (1..=self.ring.k)
            .map(|p| Generator { name: self.ring.var_name(p), degree: p as u32 })
            .collect();
        if self.quantum {
            generators.push(Generator { name: "q".into(), degree: self.ring.q_degree });
        }
        PresentationJson {
            n: self.n,
            m: self.m,
            quantum: self.quantum,
            generators,
            relations: self
                .relations
                .iter()
                .map(|r| RelationJson {
                    name: r.name.clone(),
                    lhs_monomials: terms_json(&self.ring, &r.lhs),
                    rhs: terms_json(&self.ring, &r.rhs),
                })
                .collect(),
            rank: self.rank(),
            hilbert: self.hilbert_series(),
        }
    }
}

/// Largest weighted degree of a standard monomial, when every `tau'_p` has a
/// pure power among the leading monomials.
fn finite_degree_bound(gb: &[QPolynomial], ring: &PolyRing) -> Option<u32> {
    let leads: Vec<&Monomial> = gb.iter().map(|g| g.leading().unwrap().0).collect();
    let mut bound = 0;
    for v in 1..=ring.k {
        let e = leads
            .iter()
            .filter(|l| (0..MAX_VARS).all(|w| w == v || l.exps[w] == 0))
            .map(|l| l.exps[v] as u32)
            .min()?;
        bound += (e.max(1) - 1) * v as u32;
    }
    Some(bound)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatnessReport {
    pub n: usize,
    pub m: usize,
    pub index_sets: usize,
    pub rank_generic: usize,
    pub rank_q0: usize,
    pub rank_q1: usize,
    pub torsion_free: bool,
    pub palindromic: bool,
    pub hilbert_q0: Vec<usize>,
}

impl FlatnessReport {
    pub fn passes(&self) -> bool {
        self.torsion_free
            && self.palindromic
            && self.rank_generic == self.index_sets
            && self.rank_q0 == self.index_sets
            && self.rank_q1 == self.index_sets
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: BTreeMap<String, u16>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub name: String,
    pub lhs_monomials: Vec<TermJson>,
    pub rhs: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub n: usize,
    pub m: usize,
    pub quantum: bool,
    pub generators: Vec<Generator>,
    pub relations: Vec<RelationJson>,
    pub rank: usize,
    pub hilbert: Vec<usize>,
}

fn terms_json(ring: &PolyRing, f: &QPolynomial) -> Vec<TermJson> {
    f.terms
        .iter()
        .rev()
        .map(|(m, c)| TermJson {
            coeff: c.to_string(),
            monomial: (0..=ring.k).filter(|&v| m.exps[v] > 0).map(|v| (ring.var_name(v), m.exps[v])).collect(),
        })
        .collect()
}

impl PresentationJson {
    /// Rebuilds the relation generators `lhs - rhs` from the JSON form.
    pub fn generators_as_polynomials(&self) -> Result<Vec<QPolynomial>> {
        check_range(self.n, self.m)?;
        let ring = poly_ring(self.n, self.m);
        let parse = |terms: &[TermJson]| -> Result<QPolynomial> {
            let mut f = ring.zero();
            for t in terms {
                let c = parse_rational(&t.coeff).ok_or_else(|| Error::InvalidInput(format!("bad coefficient {}", t.coeff)))?;
                let mut e = [0u16; MAX_VARS];
                for (name, &k) in &t.monomial {
                    let v = (0..=ring.k)
                        .find(|&v| ring.var_name(v) == *name)
                        .ok_or_else(|| Error::InvalidInput(format!("unknown generator {name}")))?;
                    e[v] = k;
                }
                f.add_term(ring.monomial(e), c);
            }
            Ok(f)
        };
        self.relations.iter().map(|r| Ok(parse(&r.lhs_monomials)?.sub(&parse(&r.rhs)?))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn small_determinants() {
        let r = poly_ring(3, 3);
        assert_eq!(d_poly(1, &r), r.var(1));
        assert_eq!(d_poly(2, &r), r.var(1).mul(&r.var(1)).sub(&r.var(2)));
        assert_eq!(d_poly(0, &r), r.one());
    }

    #[test]
    fn determinant_matches_expansion_at_rational_points() {
        let r = poly_ring(4, 2);
        let vals: Vec<Q> = (0..=r.k).map(|i| Q::new((3 * i as i64 - 5).into(), (i as i64 + 2).into())).collect();
        let eval = |f: &QPolynomial| -> Q {
            f.terms.iter().fold(Q::zero(), |acc, (m, c)| {
                let mut t = c.clone();
                for (v, x) in vals.iter().enumerate() {
                    for _ in 0..m.exps[v] {
                        t *= x;
                    }
                }
                acc + t
            })
        };
        for size in 1..=8usize {
            let tau = |p: i64| -> Q {
                match p {
                    0 => Q::one(),
                    p if p < 0 || p as usize > r.k => Q::zero(),
                    p => vals[p as usize].clone(),
                }
            };
            let rows = (0..size).map(|i| (0..size).map(|j| tau(1 + j as i64 - i as i64)).collect()).collect();
            assert_eq!(Matrix::from_rows(rows).determinant(), eval(&d_poly(size, &r)), "d_{size}");
        }
    }

    #[test]
    fn b_truncation() {
        let r = poly_ring(3, 3);
        // K = 4: b_5 has no square term
        let b5 = b_poly(5, &r);
        assert!(b5.is_zero());
        for s in 1..=3 {
            assert_eq!(b_poly(s, &r).homogeneous_degree(), Some(2 * s as u32));
        }
    }
}
