//! Intersection numbers on X through the blow-up of both closed orbits,
//! a P^1-bundle over E = G/(P_Y cap P_Z).
//!
//! With `zeta` the pulled-back hyperplane class, the exceptional divisor over Z
//! is `E_Z = zeta - h_Y`, and `E_Z|E_Z = h_Z - h_Y`. The pullback of `tau_v` is
//! `[E_Z] c_v` where `c_v` in H*(E) is the unique class with
//! `(h_Z - h_Y) c_v` pulled back from Z and `q_* c_v = [Z^v]`.

use super::variety::{SchubertLabel, Side, Variety};
use crate::error::{Error, Result};
use crate::exact::{q_int, Matrix, Q};
use crate::rootsys::Weight;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub struct BlowupModel<'a> {
    x: &'a Variety,
    /// `c_v` on E-Schubert classes, per Z-node.
    c: Vec<Vec<Q>>,
    /// `z_v` with `(h_Z - h_Y) c_v = q^* z_v`, per Z-node, on Z-Schubert classes.
    z: Vec<Vec<Q>>,
}

impl<'a> BlowupModel<'a> {
    pub fn new(x: &'a Variety) -> Result<Self> {
        let rs = &x.rs;
        let pe = &x.poset_e;
        let pz = &x.poset_z;
        let wy = Weight::fundamental(rs.rank, x.omega_y);
        let wz = Weight::fundamental(rs.rank, x.omega_z);
        let ne = pe.len();
        // (h_Z - h_Y) as a sparse operator on E-classes
        let mut diff: Vec<Vec<(usize, i64)>> = vec![vec![]; ne];
        for (k, row) in diff.iter_mut().enumerate() {
            for (t, c) in pe.chevalley_with(rs, k, &wz) {
                row.push((t, c));
            }
            for (t, c) in pe.chevalley_with(rs, k, &wy) {
                row.push((t, -c));
            }
        }
        // E-node -> Z-node and whether it is the minimal representative (image of q^*)
        let proj: Vec<usize> = (0..ne).map(|k| pe.project_to(rs, k, pz)).collect();
        let in_image: Vec<bool> =
            (0..ne).map(|k| pz.nodes[proj[k]].length == pe.nodes[k].length).collect();
        let fiber = x.dim_e - x.dim_z;

        let mut c = vec![];
        let mut z = vec![];
        for v in 0..pz.len() {
            let lv = pz.nodes[v].length;
            let k = lv + x.codim_z - 1;
            let unknowns: Vec<usize> = pe.nodes_of_length(k).collect();
            let col = |e: usize| unknowns.iter().position(|&u| u == e);
            let mut rows: Vec<Vec<Q>> = vec![];
            let mut rhs: Vec<Q> = vec![];
            for t in pe.nodes_of_length(k + 1).filter(|&t| !in_image[t]) {
                let mut row = vec![Q::zero(); unknowns.len()];
                for (j, &e) in unknowns.iter().enumerate() {
                    for &(to, a) in &diff[e] {
                        if to == t {
                            row[j] += q_int(a);
                        }
                    }
                }
                rows.push(row);
                rhs.push(Q::zero());
            }
            for w in pz.nodes_of_length(lv) {
                let mut row = vec![Q::zero(); unknowns.len()];
                for &e in &unknowns {
                    if proj[e] == w && pz.nodes[w].length + fiber == pe.nodes[e].length {
                        row[col(e).expect("unknown")] += q_int(1);
                    }
                }
                rows.push(row);
                rhs.push(q_int(i64::from(w == v)));
            }
            let sol = Matrix::from_rows(rows).solve_unique(&rhs).ok_or_else(|| {
                Error::Singular(format!("pullback of tau({})", x.node_name(Side::Z, v)))
            })?;
            let mut cv = vec![Q::zero(); ne];
            for (j, &e) in unknowns.iter().enumerate() {
                cv[e] = sol[j].clone();
            }
            let mut zv = vec![Q::zero(); pz.len()];
            for (e, a) in cv.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                // non-image components cancel by construction
                for &(t, d) in diff[e].iter().filter(|(t, _)| in_image[*t]) {
                    zv[proj[t]] += a * q_int(d);
                }
            }
            c.push(cv);
            z.push(zv);
        }
        Ok(BlowupModel { x, c, z })
    }

    fn to_int(q: &Q) -> Result<i64> {
        if !q.is_integer() {
            return Err(Error::InvalidInput(format!("non-integral intersection number {q}")));
        }
        q.to_integer().to_i64().ok_or_else(|| Error::Overflow(q.to_string()))
    }

    /// `int_X tau_v ∪ sigma'_u`.
    pub fn tau_sigma_prime(&self, v: usize, u: usize) -> Result<i64> {
        let ut = self.x.tilde_lift(Side::Y, u);
        Self::to_int(&self.c[v][self.x.poset_e.dual(ut)])
    }

    /// `int_X tau_v ∪ tau_w`.
    pub fn tau_tau(&self, v: usize, w: usize) -> Result<i64> {
        Self::to_int(&self.z[w][self.x.poset_z.dual(v)])
    }

    /// `tau_v` written in basis B as (label, coefficient) pairs.
    pub fn tau_in_basis_b(&self, v: usize) -> Result<Vec<(SchubertLabel, i64)>> {
        let mut out = vec![];
        for x in 0..self.x.poset_y.len() {
            let a = self.tau_sigma_prime(v, self.x.poset_y.dual(x))?;
            if a != 0 {
                out.push((SchubertLabel::sigma(x), a));
            }
        }
        for w in 0..self.x.poset_z.len() {
            let b = self.tau_tau(v, self.x.poset_z.dual(w))?;
            if b != 0 {
                out.push((SchubertLabel::tau_prime(w), b));
            }
        }
        Ok(out)
    }
}
