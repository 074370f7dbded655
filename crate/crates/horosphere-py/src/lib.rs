use horosphere::bott::{self, ClaimsFile, CohomologyResult};
use horosphere::exact::{parse_rational, Q};
use horosphere::horo::{self, BasisTag, ChevalleyTable, QuantumChevalley};
use horosphere::oddsymp::{self, IndexSet, KStrictPartition};
use horosphere::rootsys::{self, Weight};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: horosphere::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(s: &str) -> PyResult<Q> {
    parse_rational(s).ok_or_else(|| PyValueError::new_err(format!("{s} is not a rational number")))
}

type Products = Vec<(String, Vec<(String, i64, u32)>)>;

fn products(t: &ChevalleyTable) -> Products {
    t.basis
        .iter()
        .map(|b| (b.clone(), t.products[b].iter().map(|p| (p.label.clone(), p.coeff, p.qpow)).collect()))
        .collect()
}

/// Semisimplicity certificate of the hyperplane operator at a value of q.
#[pyclass(frozen, get_all)]
struct SemisimplicityReport {
    minimal_polynomial: String,
    squarefree: bool,
    distinct_eigenvalues: usize,
    determinant_nonzero: bool,
    nilpotent_at_q0: bool,
}

#[pymethods]
impl SemisimplicityReport {
    fn passes(&self) -> bool {
        self.squarefree && self.determinant_nonzero && self.nilpotent_at_q0
    }
}

/// One of the five families of horospherical varieties.
#[pyclass(frozen)]
struct Variety {
    inner: horo::Variety,
}

#[pymethods]
impl Variety {
    #[new]
    #[pyo3(signature = (case, n=None, m=None))]
    fn new(case: u8, n: Option<usize>, m: Option<usize>) -> PyResult<Self> {
        Ok(Variety { inner: horo::Variety::from_number(case, n, m).map_err(err)? })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim_x
    }

    #[getter]
    fn c1(&self) -> usize {
        self.inner.c1_x
    }

    #[getter]
    fn codims(&self) -> (usize, usize) {
        (self.inner.codim_y, self.inner.codim_z)
    }

    /// `(label, degree)` pairs of basis `"A"` or `"B"`.
    #[pyo3(signature = (tag="A"))]
    fn basis(&self, tag: &str) -> PyResult<Vec<(String, usize)>> {
        let tag = match tag {
            "A" => BasisTag::A,
            "B" => BasisTag::B,
            _ => return Err(PyValueError::new_err("basis tag must be 'A' or 'B'")),
        };
        let x = &self.inner;
        Ok(x.basis(tag).iter().map(|l| (x.label_name(l), x.degree(l))).collect())
    }

    fn betti_numbers(&self) -> Vec<usize> {
        self.inner.betti_numbers()
    }

    /// `h * a` for every basis class, as `(label, coeff, qpow)` terms.
    #[pyo3(signature = (quantum=true))]
    fn chevalley_table(&self, quantum: bool) -> PyResult<Products> {
        Ok(products(&horo::chevalley_table(&self.inner, quantum).map_err(err)?))
    }

    fn chevalley_markdown(&self) -> PyResult<String> {
        Ok(horo::chevalley_table(&self.inner, true).map_err(err)?.to_markdown())
    }

    #[pyo3(signature = (quantum=false))]
    fn hasse_dot(&self, quantum: bool) -> PyResult<String> {
        horo::chevalley_table(&self.inner, quantum).and_then(|t| t.to_dot(&self.inner)).map_err(err)
    }

    #[pyo3(signature = (q="1"))]
    fn h_minimal_polynomial(&self, q: &str) -> PyResult<String> {
        let qc = QuantumChevalley::new(&self.inner).map_err(err)?;
        let m = qc.h_matrix(&rational(q)?).map_err(err)?;
        Ok(horosphere::exact::minimal_polynomial(&m).to_string())
    }

    #[pyo3(signature = (q="1"))]
    fn semisimplicity(&self, q: &str) -> PyResult<SemisimplicityReport> {
        let r = horo::semisimplicity(&self.inner, &rational(q)?).map_err(err)?;
        Ok(SemisimplicityReport {
            minimal_polynomial: r.minimal_polynomial,
            squarefree: r.squarefree,
            distinct_eigenvalues: r.distinct_eigenvalues,
            determinant_nonzero: r.determinant_nonzero,
            nilpotent_at_q0: r.nilpotent_at_q0,
        })
    }

    fn __repr__(&self) -> String {
        format!("Variety({})", self.inner.description())
    }
}

/// Quotient presentation of the (quantum) cohomology of `IG(m, 2n+1)`.
#[pyclass(frozen)]
struct QuotientRing {
    inner: oddsymp::QuotientRing,
}

#[pymethods]
impl QuotientRing {
    #[new]
    #[pyo3(signature = (n, m, quantum=true))]
    fn new(n: usize, m: usize, quantum: bool) -> PyResult<Self> {
        let inner = if quantum { oddsymp::QuotientRing::quantum(n, m) } else { oddsymp::QuotientRing::classical(n, m) };
        Ok(QuotientRing { inner: inner.map_err(err)? })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn hilbert_series(&self) -> Vec<usize> {
        self.inner.hilbert_series()
    }

    fn is_torsion_free(&self) -> bool {
        self.inner.is_torsion_free()
    }

    /// `(name, lhs, rhs)` for each defining relation.
    fn relations(&self) -> Vec<(String, String, String)> {
        let r = &self.inner.ring;
        self.inner.relations.iter().map(|x| (x.name.clone(), r.format(&x.lhs), r.format(&x.rhs))).collect()
    }

    fn groebner_basis(&self) -> Vec<String> {
        self.inner.groebner_basis.iter().map(|g| self.inner.ring.format(g)).collect()
    }

    #[pyo3(signature = (q="1"))]
    fn minpoly_tau1(&self, q: &str) -> PyResult<String> {
        Ok(self.inner.minpoly_tau1(&rational(q)?).map_err(err)?.to_string())
    }

    /// Flatness certificate: ranks at generic q, q = 0 and q = 1, torsion-freeness, palindromy.
    fn flatness_passes(&self) -> PyResult<bool> {
        Ok(self.inner.flatness().map_err(err)?.passes())
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner.to_json()).expect("serializable")
    }
}

/// Bott cohomology of line bundles on `G/B`.
#[pyclass(frozen)]
struct RootSystem {
    inner: rootsys::RootSystem,
}

#[pymethods]
impl RootSystem {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(RootSystem { inner: rootsys::RootSystem::from_name(name).map_err(err)? })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank
    }

    #[getter]
    fn num_positive_roots(&self) -> usize {
        self.inner.num_positive_roots()
    }

    /// `None` when all cohomology vanishes, else `(degree, highest_weight, dimension)`.
    fn line_bundle_cohomology(&self, weight: Vec<i64>) -> PyResult<Option<(usize, Vec<i64>, u64)>> {
        Ok(match bott::line_bundle_cohomology(&self.inner, &Weight(weight)).map_err(err)? {
            CohomologyResult::AllZero => None,
            CohomologyResult::Concentrated { degree, highest_weight, dimension } => {
                Some((degree, highest_weight.0, dimension))
            }
        })
    }

    fn weyl_dimension(&self, weight: Vec<i64>) -> PyResult<u64> {
        bott::weyl_dimension(&self.inner, &Weight(weight)).map_err(err)
    }

    #[pyo3(signature = (weights, twist=None))]
    fn euler_characteristic(&self, weights: Vec<Vec<i64>>, twist: Option<Vec<i64>>) -> PyResult<i128> {
        let ws: Vec<Weight> = weights.into_iter().map(Weight).collect();
        let t = Weight(twist.unwrap_or_else(|| vec![0; self.inner.rank]));
        bott::euler_char_filtered(&self.inner, &ws, &t).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("RootSystem({})", self.inner.name())
    }
}

/// `(id, verdict, euler_characteristic)` for each claim in a JSON claims document.
#[pyfunction]
fn verify_claims(json: &str) -> PyResult<Vec<(String, String, i128)>> {
    let claims = ClaimsFile::parse(json).map_err(err)?;
    let reports = bott::verify_claims(&claims).map_err(err)?;
    Ok(reports
        .into_iter()
        .map(|r| {
            let v = serde_json::to_value(r.verdict).expect("serializable");
            (r.id, v.as_str().unwrap_or_default().to_string(), r.euler_characteristic)
        })
        .collect())
}

#[pyfunction]
fn enumerate_index_sets(m: usize, n_ambient: usize) -> PyResult<Vec<Vec<usize>>> {
    Ok(oddsymp::enumerate_index_sets(m, n_ambient).map_err(err)?.into_iter().map(|p| p.p).collect())
}

#[pyfunction]
fn index_to_partition(n_ambient: usize, p: Vec<usize>) -> PyResult<Vec<i64>> {
    Ok(oddsymp::index_to_partition(&IndexSet::new(n_ambient, p).map_err(err)?).parts)
}

#[pyfunction]
fn partition_to_index(n_ambient: usize, parts: Vec<i64>) -> PyResult<Vec<usize>> {
    let k = (n_ambient / 2) as i64 - parts.len() as i64;
    Ok(oddsymp::partition_to_index(&KStrictPartition { k, parts }, n_ambient).map_err(err)?.p)
}

#[pymodule]
fn horosphere_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Variety>()?;
    m.add_class::<SemisimplicityReport>()?;
    m.add_class::<QuotientRing>()?;
    m.add_class::<RootSystem>()?;
    m.add_function(wrap_pyfunction!(verify_claims, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_index_sets, m)?)?;
    m.add_function(wrap_pyfunction!(index_to_partition, m)?)?;
    m.add_function(wrap_pyfunction!(partition_to_index, m)?)?;
    Ok(())
}
