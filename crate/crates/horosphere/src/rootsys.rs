//! Root systems of types B, C, F4, G2 in fundamental-weight coordinates,
//! Weyl group words, and coset posets W^P realised as orbits.
//!
//! Conventions: Bourbaki numbering, `cartan[i][j] = <alpha_i^vee, alpha_j>`.
//! A weight is an integer vector in the basis of fundamental weights, so
//! `<lambda, alpha_i^vee> = lambda[i]`. Coroots are stored in the basis of
//! simple coroots. Simple reflections are indexed from 0.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use rustc_hash::FxHashMap as HashMap;
use std::borrow::Borrow;
use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    B,
    C,
    F4,
    G2,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::B => "B",
            LieType::C => "C",
            LieType::F4 => "F",
            LieType::G2 => "G",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn scale(&self, k: i64) -> Self {
        Weight(self.0.iter().map(|x| x * k).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Borrow<[i64]> for Weight {
    fn borrow(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A Weyl group element as a word in simple reflections, `s_{w[0]} s_{w[1]} ...`.
/// Acting on a weight applies the rightmost letter first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement {
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: vec![] }
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn inverse(&self) -> Self {
        WeylElement { word: self.word.iter().rev().copied().collect() }
    }

    /// Concatenation `self * other` (not necessarily reduced).
    pub fn compose(&self, other: &WeylElement) -> Self {
        WeylElement { word: self.word.iter().chain(&other.word).copied().collect() }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for i in &self.word {
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// Parses `e` or `s1s2s3` (1-based letters) into a word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(vec![]);
    }
    s.split('s')
        .skip(1)
        .map(|t| match t.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => Err(Error::InvalidInput(format!("bad Weyl word {s:?}"))),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Weight>,
    pub positive_coroots: Vec<Vec<i64>>,
    pub rho: Weight,
    #[serde(skip)]
    root_index: HashMap<Weight, usize>,
}

fn cartan_matrix(lie_type: LieType, rank: usize) -> Result<Vec<Vec<i64>>> {
    let ok = match lie_type {
        LieType::B => rank >= 3,
        LieType::C => rank >= 2,
        LieType::F4 => rank == 4,
        LieType::G2 => rank == 2,
    };
    if !ok {
        return Err(Error::UnsupportedRootSystem(format!("{lie_type}{rank}")));
    }
    let mut a = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        a[i][i] = 2;
        if i + 1 < rank {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    let n = rank - 1;
    match lie_type {
        // alpha_n short
        LieType::B => a[n][n - 1] = -2,
        // alpha_n long
        LieType::C => a[n - 1][n] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        LieType::F4 => a[2][1] = -2,
        // alpha short, beta long
        LieType::G2 => a[0][1] = -3,
    }
    Ok(a)
}

impl RootSystem {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(lie_type, rank)?;
        let mut rs = RootSystem {
            lie_type,
            rank,
            cartan,
            positive_roots: vec![],
            positive_coroots: vec![],
            rho: Weight(vec![1; rank]),
            root_index: HashMap::default(),
        };
        // closure of the simple (root, coroot) pairs under simple reflections
        let mut queue: VecDeque<(Weight, Vec<i64>)> = VecDeque::new();
        for j in 0..rank {
            let mut cor = vec![0; rank];
            cor[j] = 1;
            queue.push_back((rs.simple_root(j), cor));
        }
        let mut found: BTreeMap<Vec<i64>, Weight> = BTreeMap::new();
        while let Some((root, cor)) = queue.pop_front() {
            if found.contains_key(&cor) {
                continue;
            }
            for i in 0..rank {
                // <alpha_i, gamma^vee>
                let p: i64 = (0..rank).map(|k| cor[k] * rs.cartan[k][i]).sum();
                if p == 0 {
                    continue;
                }
                let mut c2 = cor.clone();
                c2[i] -= p;
                if c2.iter().all(|&x| x >= 0) && c2.iter().any(|&x| x > 0) {
                    let r2 = &root - &rs.simple_root(i).scale(root.0[i]);
                    queue.push_back((r2, c2));
                }
            }
            found.insert(cor, root);
        }
        // order by height of coroot then lexicographically
        let mut pairs: Vec<(Vec<i64>, Weight)> = found.into_iter().collect();
        pairs.sort_by_key(|(c, _)| (c.iter().sum::<i64>(), c.clone()));
        for (k, (c, r)) in pairs.into_iter().enumerate() {
            rs.root_index.insert(r.clone(), k);
            rs.positive_roots.push(r);
            rs.positive_coroots.push(c);
        }
        Ok(rs)
    }

    /// Parses names such as `G2`, `B3`, `C4`, `F4`.
    pub fn from_name(name: &str) -> Result<Self> {
        let name = name.trim();
        let bad = || Error::UnsupportedRootSystem(name.to_string());
        let (head, tail) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
        let rank: usize = tail.parse().map_err(|_| bad())?;
        let t = match head.to_ascii_uppercase().as_str() {
            "B" => LieType::B,
            "C" => LieType::C,
            "F" => LieType::F4,
            "G" => LieType::G2,
            _ => return Err(bad()),
        };
        Self::new(t, rank)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.lie_type, self.rank)
    }

    /// alpha_j in fundamental-weight coordinates (column j of the Cartan matrix).
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight((0..self.rank).map(|i| self.cartan[i][j]).collect())
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn longest_element_length(&self) -> usize {
        self.positive_roots.len()
    }

    /// Index of a positive root, if `root` is one.
    pub fn positive_root_index(&self, root: &Weight) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    /// `<lambda, gamma^vee>` for the positive coroot with index `g`.
    pub fn pair(&self, lambda: &Weight, g: usize) -> i64 {
        self.positive_coroots[g].iter().zip(&lambda.0).map(|(c, l)| c * l).sum()
    }

    /// Coroot of an arbitrary (possibly negative) root as simple-coroot coordinates.
    pub fn coroot_of(&self, root: &Weight) -> Option<Vec<i64>> {
        if let Some(g) = self.positive_root_index(root) {
            return Some(self.positive_coroots[g].clone());
        }
        self.positive_root_index(&-root)
            .map(|g| self.positive_coroots[g].iter().map(|c| -c).collect())
    }

    pub fn reflect_simple(&self, i: usize, lambda: &Weight) -> Weight {
        let k = lambda.0[i];
        if k == 0 {
            return lambda.clone();
        }
        lambda - &self.simple_root(i).scale(k)
    }

    /// Reflection in the positive root with index `g`.
    pub fn reflect(&self, g: usize, lambda: &Weight) -> Weight {
        let k = self.pair(lambda, g);
        lambda - &self.positive_roots[g].scale(k)
    }

    pub fn act(&self, w: &WeylElement, lambda: &Weight) -> Weight {
        w.word.iter().rev().fold(lambda.clone(), |acc, &i| self.reflect_simple(i, &acc))
    }

    /// `w . lambda = w(lambda + rho) - rho`.
    pub fn dot_action(&self, w: &WeylElement, lambda: &Weight) -> Weight {
        &self.act(w, &(lambda + &self.rho)) - &self.rho
    }

    /// Number of positive coroots pairing negatively with `lambda`.
    /// For `lambda = w(rho)` this is the length of `w`.
    pub fn inversion_count(&self, lambda: &Weight) -> usize {
        (0..self.positive_roots.len()).filter(|&g| self.pair(lambda, g) < 0).count()
    }

    pub fn is_regular(&self, lambda: &Weight) -> bool {
        (0..self.positive_roots.len()).all(|g| self.pair(lambda, g) != 0)
    }

    pub fn element_length(&self, w: &WeylElement) -> usize {
        self.inversion_count(&self.act(w, &self.rho))
    }

    pub fn is_reduced(&self, w: &WeylElement) -> bool {
        self.element_length(w) == w.length()
    }

    pub fn same_element(&self, a: &WeylElement, b: &WeylElement) -> bool {
        self.act(a, &self.rho) == self.act(b, &self.rho)
    }

    /// Canonical reduced word: repeatedly strip the smallest descent of `w(rho)`.
    pub fn normal_form(&self, w: &WeylElement) -> WeylElement {
        let mut mu = self.act(w, &self.rho);
        let mut word = vec![];
        while let Some(i) = (0..self.rank).find(|&i| mu.0[i] < 0) {
            mu = self.reflect_simple(i, &mu);
            word.push(i);
        }
        WeylElement { word }
    }

    /// Matrix of `w0` on fundamental-weight coordinates, columns are images of `omega_j`.
    pub fn longest_element_matrix(&self) -> Vec<Vec<i64>> {
        let w0 = self.longest_element();
        let cols: Vec<Weight> = (0..self.rank).map(|j| self.act(&w0, &Weight::fundamental(self.rank, j))).collect();
        (0..self.rank).map(|i| cols.iter().map(|c| c.0[i]).collect()).collect()
    }

    pub fn longest_element(&self) -> WeylElement {
        self.normal_form(&self.element_sending_rho_to(&-&self.rho))
    }

    fn element_sending_rho_to(&self, target: &Weight) -> WeylElement {
        // climb from rho applying s_i while the i-th coordinate is positive
        let mut mu = self.rho.clone();
        let mut word: Vec<usize> = vec![];
        while &mu != target {
            let i = (0..self.rank).find(|&i| mu.0[i] > 0).expect("target in rho orbit");
            mu = self.reflect_simple(i, &mu);
            word.insert(0, i);
        }
        WeylElement { word }
    }

    /// Element mapping `lambda` into the dominant chamber with minimal length,
    /// together with the dominant image.
    pub fn to_dominant(&self, lambda: &Weight) -> (WeylElement, Weight) {
        let mut mu = lambda.clone();
        let mut word = vec![];
        while let Some(i) = (0..self.rank).find(|&i| mu.0[i] < 0) {
            mu = self.reflect_simple(i, &mu);
            word.insert(0, i);
        }
        (WeylElement { word }, mu)
    }

    /// Sum of positive roots outside the Levi of the parabolic with the given marked nodes.
    pub fn c1_weight(&self, marked: &[usize]) -> Weight {
        let lambda = marked_weight(self.rank, marked);
        let mut s = Weight::zero(self.rank);
        for (g, r) in self.positive_roots.iter().enumerate() {
            if self.pair(&lambda, g) > 0 {
                s = &s + r;
            }
        }
        s
    }
}

fn marked_weight(rank: usize, marked: &[usize]) -> Weight {
    let mut w = Weight::zero(rank);
    for &i in marked {
        w.0[i] += 1;
    }
    w
}

/// One minimal coset representative `u` of `W / W_P`, stored with `u(lambda_P)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PosetNode {
    pub element: WeylElement,
    pub weight: Weight,
    pub length: usize,
}

/// Bruhat cover `from -> to = s_gamma u` with `gamma` a positive root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub from: usize,
    pub to: usize,
    pub root: usize,
}

/// Minimal coset representatives W^P for the parabolic whose Levi omits the
/// `marked` simple roots, as the W-orbit of `lambda_P = sum of marked omega_i`.
/// Schubert classes are indexed in the codimension convention.
#[derive(Clone, Debug, Serialize)]
pub struct CosetPoset {
    pub marked: Vec<usize>,
    pub lambda: Weight,
    pub nodes: Vec<PosetNode>,
    pub covers: Vec<Cover>,
    pub max_length: usize,
    #[serde(skip)]
    index: HashMap<Weight, usize>,
    #[serde(skip)]
    up: Vec<Vec<usize>>,
    #[serde(skip)]
    dual: Vec<usize>,
}

impl CosetPoset {
    pub fn new(rs: &RootSystem, marked: &[usize]) -> Result<Self> {
        let mut marked: Vec<usize> = marked.to_vec();
        marked.sort_unstable();
        marked.dedup();
        if marked.is_empty() || marked.iter().any(|&i| i >= rs.rank) {
            return Err(Error::InvalidParameters(format!("marked nodes {marked:?}")));
        }
        let lambda = marked_weight(rs.rank, &marked);
        // orbit weight -> (minimal representative, its image of rho)
        let mut seen: HashMap<Weight, (WeylElement, Weight)> = HashMap::default();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone(), (WeylElement::identity(), rs.rho.clone()));
        queue.push_back(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            let (u, urho) = seen[&mu].clone();
            for i in 0..rs.rank {
                if mu.0[i] > 0 {
                    let nu = rs.reflect_simple(i, &mu);
                    if !seen.contains_key(&nu) {
                        let mut word = vec![i];
                        word.extend(&u.word);
                        seen.insert(nu.clone(), (WeylElement { word }, rs.reflect_simple(i, &urho)));
                        queue.push_back(nu);
                    }
                }
            }
        }
        let mut nodes: Vec<(PosetNode, Weight)> = seen
            .into_iter()
            .map(|(weight, (element, urho))| {
                let length = element.length();
                (PosetNode { element, weight, length }, urho)
            })
            .collect();
        nodes.sort_by(|(a, _), (b, _)| (a.length, &a.element.word).cmp(&(b.length, &b.element.word)));
        let (nodes, rho_images): (Vec<PosetNode>, Vec<Weight>) = nodes.into_iter().unzip();
        let index: HashMap<Weight, usize> =
            nodes.iter().enumerate().map(|(k, n)| (n.weight.clone(), k)).collect();
        let max_length = nodes.last().map_or(0, |n| n.length);

        let mut covers = vec![];
        let mut up = vec![vec![]; nodes.len()];
        let mut buf = vec![0i64; rs.rank];
        let mut rho_buf = vec![0i64; rs.rank];
        for (k, node) in nodes.iter().enumerate() {
            for g in 0..rs.num_positive_roots() {
                let c = rs.pair(&node.weight, g);
                if c <= 0 {
                    continue;
                }
                let root = &rs.positive_roots[g].0;
                for i in 0..rs.rank {
                    buf[i] = node.weight.0[i] - c * root[i];
                }
                let t = index[buf.as_slice()];
                if nodes[t].length != node.length + 1 {
                    continue;
                }
                // s_gamma u is the minimal representative of its coset, one step up
                let cr = rs.pair(&rho_images[k], g);
                for i in 0..rs.rank {
                    rho_buf[i] = rho_images[k].0[i] - cr * root[i];
                }
                if rho_buf == rho_images[t].0 {
                    covers.push(Cover { from: k, to: t, root: g });
                    up[k].push(covers.len() - 1);
                }
            }
        }
        let w0 = rs.longest_element_matrix();
        let dual = nodes
            .iter()
            .map(|n| {
                for (i, b) in buf.iter_mut().enumerate() {
                    *b = (0..rs.rank).map(|j| w0[i][j] * n.weight.0[j]).sum();
                }
                index[buf.as_slice()]
            })
            .collect();
        Ok(CosetPoset { marked, lambda, nodes, covers, max_length, index, up, dual })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn find(&self, weight: &Weight) -> Option<usize> {
        self.index.get(weight).copied()
    }

    /// Node whose coset contains `w`.
    pub fn node_of(&self, rs: &RootSystem, w: &WeylElement) -> usize {
        self.index[&rs.act(w, &self.lambda)]
    }

    /// Node with the given word, if the word is a reduced minimal representative in this poset.
    pub fn node_with_word(&self, rs: &RootSystem, word: &[usize]) -> Option<usize> {
        let w = WeylElement { word: word.to_vec() };
        if !rs.is_reduced(&w) {
            return None;
        }
        let k = self.node_of(rs, &w);
        (self.nodes[k].length == w.length()).then_some(k)
    }

    pub fn length_profile(&self) -> Vec<usize> {
        let mut p = vec![0; self.max_length + 1];
        for n in &self.nodes {
            p[n.length] += 1;
        }
        p
    }

    pub fn nodes_of_length(&self, l: usize) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().enumerate().filter(move |(_, n)| n.length == l).map(|(k, _)| k)
    }

    pub fn covers_from(&self, k: usize) -> impl Iterator<Item = &Cover> + '_ {
        self.up[k].iter().map(move |&c| &self.covers[c])
    }

    /// Chevalley coefficients of the class `[lambda]` of a weight against node `k`:
    /// the cover `s_gamma u` gets `<u(lambda), gamma^vee>`.
    pub fn chevalley_with(&self, rs: &RootSystem, k: usize, lambda: &Weight) -> Vec<(usize, i64)> {
        let ul = rs.act(&self.nodes[k].element, lambda);
        self.covers_from(k)
            .map(|c| (c.to, rs.pair(&ul, c.root)))
            .filter(|(_, x)| *x != 0)
            .collect()
    }

    /// Chevalley coefficients for the defining weight `lambda_P`.
    pub fn chevalley_coeffs(&self, rs: &RootSystem, k: usize) -> Vec<(usize, i64)> {
        self.chevalley_with(rs, k, &self.lambda)
    }

    /// Poincare dual node, `mu -> w0 mu`.
    pub fn dual(&self, k: usize) -> usize {
        self.dual[k]
    }

    /// Image of node `k` under `W/W_P -> W/W_Q`, for a poset `other` with `Q ⊇ P`.
    pub fn project_to(&self, rs: &RootSystem, k: usize, other: &CosetPoset) -> usize {
        other.node_of(rs, &self.nodes[k].element)
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_simple_roots() {
        let rs = RootSystem::new(LieType::G2, 2).unwrap();
        assert_eq!(rs.simple_root(0), Weight(vec![2, -1]));
        assert_eq!(rs.simple_root(1), Weight(vec![-3, 2]));
        assert_eq!(rs.num_positive_roots(), 6);
    }

    #[test]
    fn root_counts() {
        for (t, r, n) in [
            (LieType::B, 3, 9),
            (LieType::B, 4, 16),
            (LieType::C, 2, 4),
            (LieType::C, 3, 9),
            (LieType::F4, 4, 24),
        ] {
            assert_eq!(RootSystem::new(t, r).unwrap().num_positive_roots(), n, "{t}{r}");
        }
    }

    #[test]
    fn rejects_unsupported() {
        assert!(RootSystem::new(LieType::B, 2).is_err());
        assert!(RootSystem::new(LieType::G2, 3).is_err());
    }

    #[test]
    fn longest_element_has_max_length() {
        let rs = RootSystem::new(LieType::C, 3).unwrap();
        let w0 = rs.longest_element();
        assert_eq!(w0.length(), 9);
        assert_eq!(rs.act(&w0, &rs.rho), -&rs.rho);
    }

    #[test]
    fn parse_words() {
        assert_eq!(parse_word("s1s2s3").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_word("e").unwrap(), Vec::<usize>::new());
        assert!(parse_word("s0").is_err());
    }

    #[test]
    fn normal_form_is_reduced_and_equal() {
        let rs = RootSystem::new(LieType::B, 3).unwrap();
        let w = WeylElement { word: vec![0, 1, 0, 1, 2, 2] };
        let nf = rs.normal_form(&w);
        assert!(rs.is_reduced(&nf));
        assert!(rs.same_element(&w, &nf));
    }
}
