//! Quantum multiplication by the hyperplane class in basis A.
//!
//! The coefficient of `q^d e` in `h * a` is `<h, a, e^vee>_d` with `e^vee` the
//! basis-B dual of `e`. Degree-one invariants reduce to the closed orbits
//! Y, Z, E; a single degree-two invariant `<h, pt, pt>_2 = 2` occurs when both
//! X and Y satisfy `dim = 2 c1 - 1`.

use super::blowup::BlowupModel;
use super::gw::HomogeneousSpace;
use super::variety::{BasisTag, CaseTag, CohomologyClass, SchubertLabel, Side, Variety};
use crate::error::{Error, Result};
use crate::exact::{minimal_polynomial, q_int, Matrix, UPoly, Q};
use num_traits::Zero;
use serde::Serialize;

/// Quantum hyperplane operator with all the degree-one data precomputed.
pub struct QuantumChevalley<'a> {
    pub x: &'a Variety,
    gy: HomogeneousSpace<'a>,
    gz: HomogeneousSpace<'a>,
    blowup: Option<BlowupModel<'a>>,
}

/// Whether the degree-one rules and the degree bound determine `h *` completely.
pub fn quantum_supported(x: &Variety) -> bool {
    matches!(
        (x.case, x.n, x.m),
        (CaseTag::One, Some(3), _) | (CaseTag::Two, _, _) | (CaseTag::Three, Some(3), Some(3)) | (CaseTag::Five, _, _)
    )
}

impl<'a> QuantumChevalley<'a> {
    pub fn new(x: &'a Variety) -> Result<Self> {
        if !quantum_supported(x) {
            return Err(Error::UnsupportedQuantumCase(x.description()));
        }
        let gy = HomogeneousSpace::new(&x.rs, &x.poset_y);
        let gz = HomogeneousSpace::new(&x.rs, &x.poset_z);
        let blowup = if x.c1_x + 1 == x.c1_z { Some(BlowupModel::new(x)?) } else { None };
        Ok(QuantumChevalley { x, gy, gz, blowup })
    }

    pub fn blowup(&self) -> Option<&BlowupModel<'a>> {
        self.blowup.as_ref()
    }

    /// `<h, sigma'_u1, sigma_u2>_1`.
    fn gw_sp_s(&self, _u1: usize, _u2: usize) -> Result<i64> {
        Ok(0)
    }

    /// `<h, sigma_u, tau_v>_1 = delta(u-tilde dual, v-tilde)` with the dual taken in E.
    fn gw_s_t(&self, u: usize, v: usize) -> Result<i64> {
        let x = self.x;
        let ut = x.tilde_lift(Side::Y, u);
        let vt = x.tilde_lift(Side::Z, v);
        Ok(i64::from(x.poset_e.dual(ut) == vt))
    }

    /// `<h, sigma'_u, tau'_v>_1`.
    fn gw_sp_tp(&self, u: usize, v: usize) -> Result<i64> {
        let x = self.x;
        if x.c1_x >= x.c1_z {
            Ok(0)
        } else if x.c1_x + 1 == x.c1_z {
            let (uh, _) = x.hat_image(u);
            Ok(self.gz.gw1(uh, v))
        } else {
            Err(Error::ExcessIntersection(format!(
                "{}: c1(X) = {} <= c1(Z) - 2 = {}",
                x.description(),
                x.c1_x,
                x.c1_z - 2
            )))
        }
    }

    /// `<h, sigma_u, tau'_v>_1`, valid when `c1(X) - c1(Y) + 1 = codim Y`.
    fn gw_s_tp(&self, u: usize, v: usize) -> Result<i64> {
        let x = self.x;
        if x.c1_x + 1 != x.c1_y + x.codim_y {
            return Err(Error::UnsupportedQuantumCase(format!(
                "{}: <h, sigma, tau'> needs c1(X) - c1(Y) + 1 = codim Y",
                x.description()
            )));
        }
        let (vh, _) = x.hat_image_z(v);
        Ok(self.gy.gw1(u, vh))
    }

    /// `<h, tau'_v1, tau'_v2>_1`.
    fn gw_tp_tp(&self, v1: usize, v2: usize) -> Result<i64> {
        let x = self.x;
        let lhs = x.c1_x as i64 - x.c1_y as i64;
        let rhs = x.codim_y as i64 - 2;
        if lhs > rhs {
            Ok(0)
        } else if lhs == rhs {
            Ok(self.gy.gw1(x.hat_image_z(v1).0, x.hat_image_z(v2).0))
        } else {
            Err(Error::UnsupportedQuantumCase(format!("{}: <h, tau', tau'>", x.description())))
        }
    }

    /// `<h, tau_v1, tau'_v2>_1`.
    fn gw_t_tp(&self, v1: usize, v2: usize) -> Result<i64> {
        let x = self.x;
        if x.c1_x > x.c1_z {
            Ok(0)
        } else if x.c1_x == x.c1_z {
            Ok(self.gz.gw1(v1, v2))
        } else if x.c1_x + 1 == x.c1_z {
            // rewrite tau_v1 in basis B
            let model = self.blowup.as_ref().expect("built when c1(X) = c1(Z) - 1");
            let mut total = 0;
            for (l, a) in model.tau_in_basis_b(v1)? {
                total += a * match l.side {
                    Side::Y => self.gw_s_tp(l.node, v2)?,
                    Side::Z => self.gw_tp_tp(l.node, v2)?,
                };
            }
            Ok(total)
        } else {
            Err(Error::ExcessIntersection(format!("{}: <h, tau, tau'>", x.description())))
        }
    }

    /// `<h, a, b>_1` for `a` in basis A and `b` in basis B.
    pub fn gw1(&self, a: &SchubertLabel, b: &SchubertLabel) -> Result<i64> {
        let x = self.x;
        let da = x.degree(a);
        let db = x.degree(b);
        if da + db + 1 != x.dim_x + x.c1_x {
            return Ok(0);
        }
        match (a.side, b.side) {
            (Side::Y, Side::Y) => self.gw_sp_s(a.node, b.node),
            (Side::Y, Side::Z) => self.gw_sp_tp(a.node, b.node),
            (Side::Z, Side::Y) => self.gw_s_t(b.node, a.node),
            (Side::Z, Side::Z) => self.gw_t_tp(a.node, b.node),
        }
    }

    /// Largest `d` with `d c1(X) <= dim X + 1`.
    pub fn max_degree(&self) -> usize {
        (self.x.dim_x + 1) / self.x.c1_x
    }

    fn degree_two_applies(&self) -> Result<bool> {
        let x = self.x;
        if self.max_degree() < 2 {
            return Ok(false);
        }
        if x.dim_x + 1 == 2 * x.c1_x && x.dim_y + 1 == 2 * x.c1_y {
            return Ok(true);
        }
        if x.case == CaseTag::Three {
            // products with h carry no q^2 in this family
            return Ok(false);
        }
        Err(Error::UnsupportedQuantumCase(format!("{}: degree-two invariants", x.description())))
    }

    /// `h * a` for a basis-A label.
    pub fn multiply_label(&self, a: &SchubertLabel) -> Result<CohomologyClass> {
        let x = self.x;
        let mut out = x.classical_chevalley_label(a)?;
        let da = x.degree(a);
        if da + 1 >= x.c1_x {
            let want = da + 1 - x.c1_x;
            for e in x.basis(BasisTag::A).into_iter().filter(|e| x.degree(e) == want) {
                let c = self.gw1(a, &x.dual_label(&e))?;
                out.add(e, 1, c);
            }
        }
        if self.degree_two_applies()? && *a == x.point() {
            out.add(x.one(), 2, 2);
        }
        Ok(out)
    }

    pub fn multiply(&self, c: &CohomologyClass) -> Result<CohomologyClass> {
        if c.basis != BasisTag::A {
            return Err(Error::InvalidInput("quantum Chevalley expects basis A".into()));
        }
        let mut out = CohomologyClass::zero(BasisTag::A);
        for (&(l, qp), &k) in &c.terms {
            out.add_scaled(&self.multiply_label(&l)?, k, qp);
        }
        Ok(out)
    }

    /// Full table `a -> h * a` over basis A.
    pub fn table(&self) -> Result<Vec<(SchubertLabel, CohomologyClass)>> {
        self.x
            .basis(BasisTag::A)
            .into_iter()
            .map(|a| Ok((a, self.multiply_label(&a)?)))
            .collect()
    }

    /// Matrix of `h *` in basis A at `q = value`; column `j` is `h * basis[j]`.
    pub fn h_matrix(&self, value: &Q) -> Result<Matrix> {
        let basis = self.x.basis(BasisTag::A);
        let n = basis.len();
        let mut m = Matrix::zeros(n, n);
        for (j, a) in basis.iter().enumerate() {
            for (&(l, qp), &k) in &self.multiply_label(a)?.terms {
                let i = basis.iter().position(|b| *b == l).expect("basis A");
                let mut v = q_int(k);
                for _ in 0..qp {
                    v *= value;
                }
                m[(i, j)] += v;
            }
        }
        Ok(m)
    }
}

/// Semisimplicity certificate for `h *` at a rational specialisation of q.
#[derive(Clone, Debug, Serialize)]
pub struct SemisimplicityReport {
    pub case: String,
    pub q: String,
    pub dimension: usize,
    pub minimal_polynomial: String,
    pub minimal_polynomial_degree: usize,
    pub squarefree: bool,
    pub distinct_eigenvalues: usize,
    pub determinant_nonzero: bool,
    pub nilpotent_at_q0: bool,
}

impl SemisimplicityReport {
    /// Squarefree minimal polynomial, invertible `h`, and nilpotent classical `h`.
    pub fn passes(&self) -> bool {
        self.squarefree && self.determinant_nonzero && self.nilpotent_at_q0
    }
}

pub fn semisimplicity(x: &Variety, value: &Q) -> Result<SemisimplicityReport> {
    let qc = QuantumChevalley::new(x)?;
    let m = qc.h_matrix(value)?;
    let p = minimal_polynomial(&m);
    let m0 = qc.h_matrix(&Q::zero())?;
    let p0 = minimal_polynomial(&m0);
    Ok(SemisimplicityReport {
        case: x.description(),
        q: value.to_string(),
        dimension: m.rows,
        minimal_polynomial: p.to_string(),
        minimal_polynomial_degree: p.degree().unwrap_or(0),
        squarefree: p.is_squarefree(),
        distinct_eigenvalues: p.squarefree_part().degree().unwrap_or(0),
        determinant_nonzero: !m.determinant().is_zero(),
        nilpotent_at_q0: p0.is_monomial() && p0 == UPoly::x_pow(p0.degree().unwrap_or(0)),
    })
}
