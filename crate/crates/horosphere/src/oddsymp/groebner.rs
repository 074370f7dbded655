//! Buchberger's algorithm with the product and chain criteria, pairs taken
//! in order of increasing lcm (normal strategy).

use super::poly::{Monomial, PolyRing, QPolynomial};
use crate::exact::Q;
use num_traits::{One, Zero};
use rustc_hash::FxHashSet;
use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

/// Remainder of `f` on division by `basis` (full reduction, every term).
pub fn normal_form(f: &QPolynomial, basis: &[QPolynomial]) -> QPolynomial {
    let leads: Vec<(Monomial, Q)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading().expect("nonzero basis element");
            (*m, c.clone())
        })
        .collect();
    let mut work: BTreeMap<Monomial, Q> = f.terms.clone();
    let mut rem = QPolynomial::default();
    while let Some((m, c)) = work.pop_last() {
        match leads.iter().position(|(l, _)| l.divides(&m)) {
            Some(i) => {
                let t = m.div(&leads[i].0);
                let f = -(c / &leads[i].1);
                for (gm, gc) in basis[i].terms.iter().rev().skip(1) {
                    let key = gm.mul(&t);
                    let v = gc * &f;
                    match work.entry(key) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(v);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() += v;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
            None => {
                rem.terms.insert(m, c);
            }
        }
    }
    rem
}

fn s_polynomial(f: &QPolynomial, g: &QPolynomial, ring: &PolyRing) -> QPolynomial {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm, ring);
    f.mul_term(&l.div(fm), &(Q::one() / fc))
        .sub(&g.mul_term(&l.div(gm), &(Q::one() / gc)))
}

/// Reduced Groebner basis (monic, sorted by leading monomial) of the ideal
/// generated by `gens`.
pub fn groebner_basis(gens: &[QPolynomial], ring: &PolyRing) -> Vec<QPolynomial> {
    let mut basis: Vec<QPolynomial> = vec![];
    let mut pending: BinaryHeap<Reverse<(Monomial, usize, usize)>> = BinaryHeap::new();
    let mut open: FxHashSet<(usize, usize)> = FxHashSet::default();
    let mut queue: Vec<QPolynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    queue.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    let add = |basis: &mut Vec<QPolynomial>,
               pending: &mut BinaryHeap<Reverse<(Monomial, usize, usize)>>,
               open: &mut FxHashSet<(usize, usize)>,
               h: QPolynomial| {
        let j = basis.len();
        let hm = *h.leading().unwrap().0;
        basis.push(h.monic());
        for (i, b) in basis[..j].iter().enumerate() {
            let l = b.leading().unwrap().0.lcm(&hm, ring);
            pending.push(Reverse((l, i, j)));
            open.insert((i, j));
        }
    };
    for g in queue {
        let r = normal_form(&g, &basis);
        if !r.is_zero() {
            add(&mut basis, &mut pending, &mut open, r);
        }
    }
    while let Some(Reverse((l, i, j))) = pending.pop() {
        open.remove(&(i, j));
        let (mi, mj) = (*basis[i].leading().unwrap().0, *basis[j].leading().unwrap().0);
        if mi.coprime(&mj) {
            continue;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading().unwrap().0.divides(&l)
                && !open.contains(&key(i, k))
                && !open.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j], ring), &basis);
        if !r.is_zero() {
            add(&mut basis, &mut pending, &mut open, r);
        }
    }
    reduce_basis(basis)
}

/// Minimal, then fully interreduced, monic basis sorted by leading monomial.
fn reduce_basis(basis: Vec<QPolynomial>) -> Vec<QPolynomial> {
    let leads: Vec<Monomial> = basis.iter().map(|g| *g.leading().unwrap().0).collect();
    let mut keep: Vec<QPolynomial> = vec![];
    for (i, g) in basis.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(k, lk)| {
            k != i && lk.divides(&leads[i]) && (leads[k] != leads[i] || k < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    keep.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    let mut out = keep.clone();
    for i in 0..keep.len() {
        let others: Vec<QPolynomial> =
            out.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, g)| g.clone()).collect();
        let (m, c) = {
            let (m, c) = keep[i].leading().unwrap();
            (*m, c.clone())
        };
        let mut tail = out[i].clone();
        tail.terms.remove(&m);
        let mut r = normal_form(&tail, &others);
        r.terms.insert(m, c);
        out[i] = r.monic();
    }
    out
}

/// Whether every S-polynomial of `basis` reduces to zero.
pub fn is_groebner(basis: &[QPolynomial], ring: &PolyRing) -> bool {
    (0..basis.len()).all(|i| {
        (i + 1..basis.len()).all(|j| normal_form(&s_polynomial(&basis[i], &basis[j], ring), basis).is_zero())
    })
}

/// Monomials in the variables `vars` outside the leading-term ideal, up to
/// weighted degree `max_degree`.
pub fn standard_monomials(
    basis: &[QPolynomial],
    ring: &PolyRing,
    vars: &[usize],
    max_degree: u32,
) -> Vec<Monomial> {
    let leads: Vec<Monomial> = basis.iter().map(|g| *g.leading().unwrap().0).collect();
    let mut out = vec![];
    let mut e = [0u16; super::poly::MAX_VARS];
    fn rec(
        idx: usize,
        vars: &[usize],
        e: &mut [u16; super::poly::MAX_VARS],
        ring: &PolyRing,
        leads: &[Monomial],
        max_degree: u32,
        out: &mut Vec<Monomial>,
    ) {
        let m = ring.monomial(*e);
        if m.degree > max_degree || leads.iter().any(|l| l.divides(&m)) {
            return;
        }
        if idx == vars.len() {
            out.push(m);
            return;
        }
        rec(idx + 1, vars, e, ring, leads, max_degree, out);
        let v = vars[idx];
        let saved = e[v];
        loop {
            e[v] += 1;
            let m = ring.monomial(*e);
            if m.degree > max_degree || leads.iter().any(|l| l.divides(&m)) {
                break;
            }
            rec(idx + 1, vars, e, ring, leads, max_degree, out);
        }
        e[v] = saved;
    }
    rec(0, vars, &mut e, ring, &leads, max_degree, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q_int;

    #[test]
    fn univariate_gcd_like_ideal() {
        // (t1^3, t1^2 - t2) in Q[t1, t2] with weights 1, 2
        let r = PolyRing::new(2, 3);
        let t1 = r.var(1);
        let t2 = r.var(2);
        let f = t1.pow(3, &r);
        let g = t1.pow(2, &r).sub(&t2);
        let gb = groebner_basis(&[f.clone(), g.clone()], &r);
        assert!(is_groebner(&gb, &r));
        assert!(normal_form(&f, &gb).is_zero());
        assert!(normal_form(&g, &gb).is_zero());
        assert!(!normal_form(&t1, &gb).is_zero());
        // quotient spanned by 1, t1, t2? t1^2 = t2, t1^3 = 0 -> t1 t2 = 0, t2^2 = 0
        let std = standard_monomials(&gb, &r, &[1, 2], 20);
        assert_eq!(std.len(), 3);
    }

    #[test]
    fn inhomogeneous_ideal() {
        // (t1^2 - 1, t1 t2 - t2 - 2, t2^2) is the unit ideal? t2^2 forces t2 nilpotent,
        // t2 (t1 - 1) = 2 then 4 = t2^2 (t1-1)^2 = 0
        let r = PolyRing::new(2, 3);
        let t1 = r.var(1);
        let t2 = r.var(2);
        let one = r.one();
        let f = t1.mul(&t1).sub(&one);
        let g = t1.mul(&t2).sub(&t2).sub(&r.constant(q_int(2)));
        let h = t2.mul(&t2);
        let gb = groebner_basis(&[f, g, h], &r);
        assert_eq!(gb, vec![r.one()]);
    }
}
