//! Degree-one three-point invariants `<h, a, b>_1` of G/P with P maximal, read off the quantum Chevalley formula for G/P.

use crate::rootsys::{CosetPoset, RootSystem};

/// Quantum Chevalley data for `G/P` with `P` maximal at node `p`.
#[derive(Clone, Debug)]
pub struct HomogeneousSpace<'a> {
    pub rs: &'a RootSystem,
    pub poset: &'a CosetPoset,
    pub p: usize,
    pub dim: usize,
    pub c1: usize,
}

impl<'a> HomogeneousSpace<'a> {
    pub fn new(rs: &'a RootSystem, poset: &'a CosetPoset) -> Self {
        assert_eq!(poset.marked.len(), 1, "maximal parabolic expected");
        let p = poset.marked[0];
        let c1 = rs.c1_weight(&[p]).0[p] as usize;
        HomogeneousSpace { rs, poset, p, dim: poset.max_length, c1 }
    }

    /// Degree-`d` terms of `h * sigma_u`: for each positive root `alpha` whose coroot has
    /// `alpha_P^vee`-coefficient `d`, the class of `u s_alpha` with coefficient `d`, kept when
    /// the length drops by exactly `d * c1 - 1`.
    pub fn quantum_terms(&self, u: usize, d: i64) -> Vec<(usize, i64)> {
        let node = &self.poset.nodes[u];
        let mut out: Vec<(usize, i64)> = vec![];
        for (g, alpha) in self.rs.positive_roots.iter().enumerate() {
            let coeff = self.rs.positive_coroots[g][self.p];
            if coeff != d {
                continue;
            }
            // u s_alpha (lambda) = lambda - d * u(alpha)
            let ualpha = self.rs.act(&node.element, alpha);
            let target = &node.weight - &ualpha.scale(coeff);
            let t = self.poset.find(&target).expect("orbit closed under W");
            let want = node.length as i64 + 1 - d * self.c1 as i64;
            if self.poset.nodes[t].length as i64 == want {
                match out.iter_mut().find(|(k, _)| *k == t) {
                    Some(e) => e.1 += coeff,
                    None => out.push((t, coeff)),
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `<h, sigma_a, sigma_b>_1`: coefficient of `q sigma_{b^vee}` in `h * sigma_a`.
    pub fn gw1(&self, a: usize, b: usize) -> i64 {
        let la = self.poset.nodes[a].length;
        let lb = self.poset.nodes[b].length;
        if la + lb + 1 != self.dim + self.c1 {
            return 0;
        }
        let target = self.poset.dual(b);
        self.quantum_terms(a, 1).into_iter().find(|(t, _)| *t == target).map_or(0, |(_, c)| c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::LieType;

    #[test]
    fn quadric_q5_line_times_h_has_q() {
        // G2 / P_1 is the 5-dimensional quadric
        let rs = RootSystem::new(LieType::G2, 2).unwrap();
        let poset = CosetPoset::new(&rs, &[0]).unwrap();
        let x = HomogeneousSpace::new(&rs, &poset);
        assert_eq!((x.dim, x.c1), (5, 5));
        assert_eq!(x.quantum_terms(4, 1), vec![(0, 1)]);
        assert_eq!(x.gw1(4, 5), 1);
        assert_eq!(x.gw1(3, 5), 0);
    }

    #[test]
    fn projective_line_in_c2_lagrangian() {
        // LG(2,4) = C2/P_2 is a 3-dimensional quadric
        let rs = RootSystem::new(LieType::C, 2).unwrap();
        let poset = CosetPoset::new(&rs, &[1]).unwrap();
        let x = HomogeneousSpace::new(&rs, &poset);
        assert_eq!((x.dim, x.c1), (3, 3));
        assert_eq!(x.quantum_terms(2, 1), vec![(0, 1)]);
    }
}
