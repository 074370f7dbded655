use crate::error::{Error, Result};
use crate::rootsys::{parse_word, CosetPoset, LieType, RootSystem};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Which closed orbit a Schubert class comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Y,
    Z,
}

/// `A = {sigma'_u, tau_v}`, `B = {tau'_v, sigma_u}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisTag {
    A,
    B,
}

/// `sigma'_u` is (Y, primed), `sigma_u` is (Y, unprimed), and likewise `tau'`, `tau` on Z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SchubertLabel {
    pub side: Side,
    pub primed: bool,
    pub node: usize,
}

impl SchubertLabel {
    pub fn sigma_prime(node: usize) -> Self {
        SchubertLabel { side: Side::Y, primed: true, node }
    }
    pub fn sigma(node: usize) -> Self {
        SchubertLabel { side: Side::Y, primed: false, node }
    }
    pub fn tau_prime(node: usize) -> Self {
        SchubertLabel { side: Side::Z, primed: true, node }
    }
    pub fn tau(node: usize) -> Self {
        SchubertLabel { side: Side::Z, primed: false, node }
    }

    pub fn basis(&self) -> BasisTag {
        match (self.side, self.primed) {
            (Side::Y, true) | (Side::Z, false) => BasisTag::A,
            _ => BasisTag::B,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    One,
    Two,
    Three,
    Four,
    Five,
}

impl CaseTag {
    pub fn from_number(k: u8) -> Result<Self> {
        Ok(match k {
            1 => CaseTag::One,
            2 => CaseTag::Two,
            3 => CaseTag::Three,
            4 => CaseTag::Four,
            5 => CaseTag::Five,
            _ => return Err(Error::InvalidParameters(format!("case {k} not in 1..=5"))),
        })
    }

    pub fn number(&self) -> u8 {
        *self as u8 + 1
    }
}

/// One of the five families, with its numerical invariants and coset posets.
#[derive(Clone, Debug)]
pub struct Variety {
    pub case: CaseTag,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub rs: RootSystem,
    /// Index of the fundamental weight defining Y.
    pub omega_y: usize,
    /// Index of the fundamental weight defining Z.
    pub omega_z: usize,
    pub poset_y: CosetPoset,
    pub poset_z: CosetPoset,
    pub poset_e: CosetPoset,
    pub dim_x: usize,
    pub dim_y: usize,
    pub dim_z: usize,
    pub dim_e: usize,
    pub codim_y: usize,
    pub codim_z: usize,
    pub c1_x: usize,
    pub c1_y: usize,
    pub c1_z: usize,
    names_y: Vec<String>,
    names_z: Vec<String>,
}

// (side, name, reduced word) conventions for the doubled degrees of the four worked examples
type Hint = (Side, &'static str, &'static str);

fn naming_hints(case: CaseTag, n: Option<usize>, m: Option<usize>) -> &'static [Hint] {
    match (case, n, m) {
        (CaseTag::One, Some(3), _) => &[
            (Side::Y, "u'_2", "s1s2"),
            (Side::Y, "u'_3", "s3s1s2"),
            (Side::Y, "u'_4", "s2s3s1s2"),
            (Side::Y, "u'_5", "s3s2s3s1s2"),
            (Side::Z, "v_3", "s1s2s3"),
            (Side::Z, "v'_3", "s3s2s3"),
        ],
        (CaseTag::Two, _, _) => &[(Side::Z, "v_3", "s1s2s3"), (Side::Z, "v'_3", "s3s2s3")],
        (CaseTag::Three, Some(3), Some(3)) => &[
            (Side::Y, "u_3", "s1s2s3"),
            (Side::Y, "u'_3", "s3s2s3"),
            (Side::Z, "v_2", "s1s2"),
            (Side::Z, "v_3", "s3s1s2"),
            (Side::Z, "v_4", "s2s3s1s2"),
            (Side::Z, "v_5", "s3s2s3s1s2"),
        ],
        _ => &[],
    }
}

fn assign_names(rs: &RootSystem, poset: &CosetPoset, letter: char, hints: &[(&str, &str)]) -> Result<Vec<String>> {
    let mut names: Vec<Option<String>> = vec![None; poset.len()];
    for (name, word) in hints {
        let w = parse_word(word)?;
        let k = poset.node_with_word(rs, &w).ok_or_else(|| {
            Error::InvalidInput(format!("naming word {word} is not a minimal representative"))
        })?;
        names[k] = Some(name.to_string());
    }
    for l in 0..=poset.max_length {
        let nodes: Vec<usize> = poset.nodes_of_length(l).collect();
        let used: Vec<String> = nodes.iter().filter_map(|&k| names[k].clone()).collect();
        let mut candidates = (0..).map(|p| format!("{letter}{}_{l}", "'".repeat(p)));
        for &k in &nodes {
            if names[k].is_none() {
                let c = candidates.by_ref().find(|c| !used.contains(c)).expect("infinite");
                names[k] = Some(c);
            }
        }
    }
    Ok(names.into_iter().map(|x| x.expect("all named")).collect())
}

impl Variety {
    pub fn new(case: CaseTag, n: Option<usize>, m: Option<usize>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        let (rs, omega_y, omega_z, n, m) = match case {
            CaseTag::One => {
                let Some(n) = n else { return bad("case 1 needs n".into()) };
                if n < 3 {
                    return bad(format!("case 1 needs n >= 3, got {n}"));
                }
                (RootSystem::new(LieType::B, n)?, n - 2, n - 1, Some(n), None)
            }
            CaseTag::Two => (RootSystem::new(LieType::B, 3)?, 0, 2, None, None),
            CaseTag::Three => {
                let (Some(n), Some(m)) = (n, m) else { return bad("case 3 needs n and m".into()) };
                if n < 2 || m < 2 || m > n {
                    return bad(format!("case 3 needs 2 <= m <= n, got n={n}, m={m}"));
                }
                (RootSystem::new(LieType::C, n)?, m - 1, m - 2, Some(n), Some(m))
            }
            CaseTag::Four => (RootSystem::new(LieType::F4, 4)?, 1, 2, None, None),
            CaseTag::Five => (RootSystem::new(LieType::G2, 2)?, 1, 0, None, None),
        };
        let poset_y = CosetPoset::new(&rs, &[omega_y])?;
        let poset_z = CosetPoset::new(&rs, &[omega_z])?;
        let poset_e = CosetPoset::new(&rs, &[omega_y, omega_z])?;
        let dim_y = poset_y.max_length;
        let dim_z = poset_z.max_length;
        let dim_e = poset_e.max_length;
        let dim_x = dim_e + 1;
        // -K of the P^1-bundle over E compared with the blow-up formula gives
        // c1(X) as the sum of the two coordinates of c1(E).
        let c1_e = rs.c1_weight(&[omega_y, omega_z]);
        let c1_x = (c1_e.0[omega_y] + c1_e.0[omega_z]) as usize;
        let c1_y = rs.c1_weight(&[omega_y]).0[omega_y] as usize;
        let c1_z = rs.c1_weight(&[omega_z]).0[omega_z] as usize;
        let hints = naming_hints(case, n, m);
        let pick = |s: Side| -> Vec<(&str, &str)> {
            hints.iter().filter(|h| h.0 == s).map(|h| (h.1, h.2)).collect()
        };
        let names_y = assign_names(&rs, &poset_y, 'u', &pick(Side::Y))?;
        let names_z = assign_names(&rs, &poset_z, 'v', &pick(Side::Z))?;
        Ok(Variety {
            case,
            n,
            m,
            rs,
            omega_y,
            omega_z,
            poset_y,
            poset_z,
            poset_e,
            dim_x,
            dim_y,
            dim_z,
            dim_e,
            codim_y: dim_x - dim_y,
            codim_z: dim_x - dim_z,
            c1_x,
            c1_y,
            c1_z,
            names_y,
            names_z,
        })
    }

    pub fn from_number(case: u8, n: Option<usize>, m: Option<usize>) -> Result<Self> {
        Self::new(CaseTag::from_number(case)?, n, m)
    }

    pub fn description(&self) -> String {
        let mut s = format!("case ({})", self.case.number());
        if let Some(n) = self.n {
            s += &format!(" n={n}");
        }
        if let Some(m) = self.m {
            s += &format!(" m={m}");
        }
        s
    }

    pub fn poset(&self, side: Side) -> &CosetPoset {
        match side {
            Side::Y => &self.poset_y,
            Side::Z => &self.poset_z,
        }
    }

    pub fn codim(&self, side: Side) -> usize {
        match side {
            Side::Y => self.codim_y,
            Side::Z => self.codim_z,
        }
    }

    pub fn node_name(&self, side: Side, node: usize) -> &str {
        match side {
            Side::Y => &self.names_y[node],
            Side::Z => &self.names_z[node],
        }
    }

    pub fn node_by_name(&self, side: Side, name: &str) -> Option<usize> {
        let names = match side {
            Side::Y => &self.names_y,
            Side::Z => &self.names_z,
        };
        names.iter().position(|x| x == name)
    }

    /// `sigma'(u_2)`, `tau(v'_3)`, ...
    pub fn label_name(&self, l: &SchubertLabel) -> String {
        let head = match l.side {
            Side::Y => "sigma",
            Side::Z => "tau",
        };
        format!("{head}{}({})", if l.primed { "'" } else { "" }, self.node_name(l.side, l.node))
    }

    pub fn parse_label(&self, s: &str) -> Result<SchubertLabel> {
        let bad = || Error::InvalidInput(format!("unknown class label {s:?}"));
        let s = s.trim();
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let (side, primed) = match head {
            "sigma'" => (Side::Y, true),
            "sigma" => (Side::Y, false),
            "tau'" => (Side::Z, true),
            "tau" => (Side::Z, false),
            _ => return Err(bad()),
        };
        let node = self.node_by_name(side, inner).ok_or_else(bad)?;
        Ok(SchubertLabel { side, primed, node })
    }

    /// Complex codimension of the class in X.
    pub fn degree(&self, l: &SchubertLabel) -> usize {
        let len = self.poset(l.side).nodes[l.node].length;
        if l.primed {
            len
        } else {
            len + self.codim(l.side)
        }
    }

    /// Basis ordered by degree; within a degree Y-classes precede Z-classes.
    pub fn basis(&self, tag: BasisTag) -> Vec<SchubertLabel> {
        let (py, pz) = match tag {
            BasisTag::A => (true, false),
            BasisTag::B => (false, true),
        };
        let mut out: Vec<SchubertLabel> = (0..self.poset_y.len())
            .map(|k| SchubertLabel { side: Side::Y, primed: py, node: k })
            .chain((0..self.poset_z.len()).map(|k| SchubertLabel { side: Side::Z, primed: pz, node: k }))
            .collect();
        out.sort_by_key(|l| (self.degree(l), l.side, l.node));
        out
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        let mut b = vec![0; self.dim_x + 1];
        for l in self.basis(BasisTag::A) {
            b[self.degree(&l)] += 1;
        }
        b
    }

    /// Poincare dual: `sigma'_u <-> sigma_{u^vee}`, `tau_v <-> tau'_{v^vee}`.
    pub fn dual_label(&self, l: &SchubertLabel) -> SchubertLabel {
        SchubertLabel { side: l.side, primed: !l.primed, node: self.poset(l.side).dual(l.node) }
    }

    /// Poincare pairing between a basis-A class and a basis-B class.
    pub fn poincare_pairing(&self, a: &SchubertLabel, b: &SchubertLabel) -> Result<i64> {
        if a.basis() != BasisTag::A || b.basis() != BasisTag::B {
            return Err(Error::InvalidInput("pairing expects (basis A, basis B)".into()));
        }
        Ok(i64::from(self.dual_label(a) == *b))
    }

    /// `u -> u-hat` for `u` in W^{P_Y}: the Z-node reached by applying `u` to `omega_Z`,
    /// with `degree_drop = (l(u) + 1 - codim Z) - l(u-hat)`.
    pub fn hat_image(&self, u: usize) -> (usize, i64) {
        let node = &self.poset_y.nodes[u];
        let v = self.poset_z.node_of(&self.rs, &node.element);
        let expected = node.length as i64 + 1 - self.codim_z as i64;
        (v, expected - self.poset_z.nodes[v].length as i64)
    }

    /// The symmetric map W^{P_Z} -> W^{P_Y}.
    pub fn hat_image_z(&self, v: usize) -> (usize, i64) {
        let node = &self.poset_z.nodes[v];
        let u = self.poset_y.node_of(&self.rs, &node.element);
        let expected = node.length as i64 + 1 - self.codim_y as i64;
        (u, expected - self.poset_y.nodes[u].length as i64)
    }

    /// `u -> u-tilde` in W^{P_Y cap P_Z}, labelling the full preimage of a Schubert variety.
    pub fn tilde_lift(&self, side: Side, k: usize) -> usize {
        let e = self.poset(side).nodes[k].element.clone();
        let t = self.poset_e.node_of(&self.rs, &e);
        debug_assert_eq!(self.poset_e.nodes[t].length, e.length());
        t
    }

    pub fn one(&self) -> SchubertLabel {
        SchubertLabel::sigma_prime(0)
    }

    pub fn hyperplane(&self) -> SchubertLabel {
        SchubertLabel::sigma_prime(1)
    }

    pub fn point(&self) -> SchubertLabel {
        SchubertLabel::tau(self.poset_z.top())
    }

    /// Classical `h ∪ a` for a basis-A label.
    pub fn classical_chevalley_label(&self, a: &SchubertLabel) -> Result<CohomologyClass> {
        if a.basis() != BasisTag::A {
            return Err(Error::InvalidInput("classical Chevalley expects basis A".into()));
        }
        let mut out = CohomologyClass::zero(BasisTag::A);
        let poset = self.poset(a.side);
        for (to, c) in poset.chevalley_coeffs(&self.rs, a.node) {
            out.add(SchubertLabel { node: to, ..*a }, 0, c);
        }
        if a.side == Side::Y {
            let (v, drop) = self.hat_image(a.node);
            if drop == 0 {
                out.add(SchubertLabel::tau(v), 0, 1);
            }
        }
        Ok(out)
    }

    pub fn classical_chevalley(&self, c: &CohomologyClass) -> Result<CohomologyClass> {
        let mut out = CohomologyClass::zero(BasisTag::A);
        for (&(l, qp), &x) in &c.terms {
            let p = self.classical_chevalley_label(&l)?;
            out.add_scaled(&p, x, qp);
        }
        Ok(out)
    }
}

/// Sparse `Z[q]`-combination of Schubert labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub basis: BasisTag,
    pub terms: BTreeMap<(SchubertLabel, u32), i64>,
}

impl CohomologyClass {
    pub fn zero(basis: BasisTag) -> Self {
        CohomologyClass { basis, terms: BTreeMap::new() }
    }

    pub fn from_label(l: SchubertLabel) -> Self {
        let mut c = Self::zero(l.basis());
        c.add(l, 0, 1);
        c
    }

    pub fn add(&mut self, l: SchubertLabel, qpow: u32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry((l, qpow)).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&(l, qpow));
        }
    }

    pub fn add_scaled(&mut self, other: &CohomologyClass, k: i64, qshift: u32) {
        for (&(l, qp), &x) in &other.terms {
            self.add(l, qp + qshift, k * x);
        }
    }

    pub fn coeff(&self, l: &SchubertLabel, qpow: u32) -> i64 {
        self.terms.get(&(*l, qpow)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_qpow(&self) -> u32 {
        self.terms.keys().map(|(_, q)| *q).max().unwrap_or(0)
    }

    /// Total degree of each term, with `deg q = c1`.
    pub fn degrees(&self, x: &Variety) -> Vec<usize> {
        self.terms.keys().map(|(l, q)| x.degree(l) + *q as usize * x.c1_x).collect()
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}
