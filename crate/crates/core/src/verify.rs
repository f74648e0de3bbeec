//! End-to-end checks of the main results, each returning a serializable
//! report with an overall `ok` flag. Shared by the command-line tool and the
//! acceptance suite.

use crate::fpgroup::{
    abelian_invariants, b23_presentation, coset_enumerate, group_order, verify_homomorphism,
    PermRep, Presentation, Word,
};
use crate::matgroup::{
    self, closure, make_generators, modulus, polynomial_action, MatError, MatgroupReport,
    MonomialElement, MonomialOracle, Variant,
};
use crate::pipeline::{
    self, b23_pipeline_from, c23_certificates_from, c23_pipeline_from, PipelineError,
};
use crate::polyalg::{
    parse_polynomial, tangent_cone, ParseOptions, PolyError, PolyMap, SparsePolynomial,
};
use crate::resgraph::{
    self, discriminant_group, family_graph, run_script, BlowupScript, Family, ResError,
};
use crate::zvk::LineArrangement;
use serde::Serialize;
use std::path::Path;
use thiserror::Error;

/// Coset budget for the groups checked here (at most a few thousand elements).
pub const COSET_BOUND: usize = 2_000_000;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
    #[error(transparent)]
    Res(#[from] ResError),
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("fixture {name}: {msg}")]
    Fixture { name: String, msg: String },
}

/// Fixture texts, keyed by their file names in a data directory.
#[derive(Clone, Debug)]
pub struct Fixtures {
    pub seven_lines: String,
    pub b23_pipeline: String,
    pub c23_monodromy: String,
    pub c23_tietze: String,
    pub b23_blowups: String,
    pub c23_blowups: String,
    pub c33_blowups: String,
    /// `(file name, origin)`, origin being a path or `"bundled"`.
    pub sources: Vec<(String, String)>,
}

pub const FIXTURE_FILES: [&str; 7] = [
    "seven_lines.json",
    "b23_pipeline.json",
    "c23_monodromy.json",
    "c23_tietze.json",
    "b23_blowups.json",
    "c23_blowups.json",
    "c33_blowups.json",
];

fn bundled_text(name: &str) -> &'static str {
    match name {
        "seven_lines.json" => pipeline::SEVEN_LINES,
        "b23_pipeline.json" => pipeline::B23_PIPELINE,
        "c23_monodromy.json" => pipeline::C23_MONODROMY,
        "c23_tietze.json" => pipeline::C23_TIETZE,
        "b23_blowups.json" => resgraph::B23_BLOWUPS,
        "c23_blowups.json" => resgraph::C23_BLOWUPS,
        "c33_blowups.json" => resgraph::C33_BLOWUPS,
        _ => unreachable!("unknown fixture {name}"),
    }
}

impl Fixtures {
    pub fn bundled() -> Self {
        Self::load(None).expect("bundled fixtures are always present")
    }

    /// Files present in `dir` override the bundled copies.
    pub fn from_dir(dir: &Path) -> Result<Self, VerifyError> {
        Self::load(Some(dir))
    }

    fn load(dir: Option<&Path>) -> Result<Self, VerifyError> {
        let mut texts = Vec::new();
        let mut sources = Vec::new();
        for name in FIXTURE_FILES {
            let path = dir.map(|d| d.join(name)).filter(|p| p.exists());
            let (text, origin) = match path {
                Some(p) => {
                    let t = std::fs::read_to_string(&p).map_err(|e| VerifyError::Fixture {
                        name: name.into(),
                        msg: e.to_string(),
                    })?;
                    (t, p.display().to_string())
                }
                None => (bundled_text(name).to_string(), "bundled".to_string()),
            };
            texts.push(text);
            sources.push((name.to_string(), origin));
        }
        let mut it = texts.into_iter();
        let mut next = || it.next().unwrap();
        Ok(Fixtures {
            seven_lines: next(),
            b23_pipeline: next(),
            c23_monodromy: next(),
            c23_tietze: next(),
            b23_blowups: next(),
            c23_blowups: next(),
            c33_blowups: next(),
            sources,
        })
    }

    pub fn arrangement(&self) -> Result<LineArrangement, VerifyError> {
        LineArrangement::from_json(&self.seven_lines).map_err(|e| VerifyError::Fixture {
            name: "seven_lines.json".into(),
            msg: e.to_string(),
        })
    }

    pub fn script(&self, family: resgraph::ModelFamily) -> Result<BlowupScript, VerifyError> {
        let (name, text) = match family {
            resgraph::ModelFamily::B23 => ("b23_blowups.json", &self.b23_blowups),
            resgraph::ModelFamily::C23 => ("c23_blowups.json", &self.c23_blowups),
            resgraph::ModelFamily::C33 => ("c33_blowups.json", &self.c33_blowups),
        };
        serde_json::from_str(text).map_err(|e| VerifyError::Fixture {
            name: name.into(),
            msg: e.to_string(),
        })
    }
}

/// Mutually inverse homomorphisms between two finite presentations, checked
/// in the regular representations of both.
#[derive(Clone, Debug, Serialize)]
pub struct IsoCheck {
    pub order_left: Option<usize>,
    pub order_right: Option<usize>,
    pub forward_is_hom: bool,
    pub backward_is_hom: bool,
    pub round_trip: bool,
    pub ok: bool,
}

pub fn check_isomorphism(
    a: &Presentation,
    b: &Presentation,
    to_b: &[Word],
    to_a: &[Word],
) -> IsoCheck {
    let ta = coset_enumerate(a, &[], COSET_BOUND);
    let tb = coset_enumerate(b, &[], COSET_BOUND);
    let (ra, rb) = (PermRep::from_table(&ta), PermRep::from_table(&tb));
    let mut out = IsoCheck {
        order_left: ta.index(),
        order_right: tb.index(),
        forward_is_hom: false,
        backward_is_hom: false,
        round_trip: false,
        ok: false,
    };
    let (Some(ra), Some(rb)) = (ra, rb) else {
        return out;
    };
    let fwd: Vec<_> = to_b.iter().map(|w| rb.eval(w)).collect();
    let bwd: Vec<_> = to_a.iter().map(|w| ra.eval(w)).collect();
    out.forward_is_hom = verify_homomorphism(a, &fwd, &rb);
    out.backward_is_hom = verify_homomorphism(b, &bwd, &ra);
    let a_back = (0..a.ngens()).all(|i| ra.eval(&to_b[i].substitute(to_a)) == ra.generator(i));
    let b_back = (0..b.ngens()).all(|i| rb.eval(&to_a[i].substitute(to_b)) == rb.generator(i));
    out.round_trip = a_back && b_back;
    out.ok = out.forward_is_hom
        && out.backward_is_hom
        && out.round_trip
        && out.order_left == out.order_right;
    out
}

/// `b23_presentation(p)` ≅ the matrix group for `m = p + 2` via `a ↦ S`, `ℓ ↦ T·S⁻¹`.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixIsoCheck {
    pub m: u32,
    pub is_hom: bool,
    pub image_order: usize,
    pub presentation_order: Option<usize>,
    pub ok: bool,
}

pub fn check_matrix_isomorphism(m: u32) -> Result<MatrixIsoCheck, VerifyError> {
    let (s, t) = make_generators(m, Variant::G)?;
    let b = b23_presentation(m - 2);
    let images = [s, t.mul(&s.inv())];
    let is_hom = verify_homomorphism(&b, &images, &MonomialOracle { n: modulus(m) });
    let image_order = closure(&images, matgroup::DEFAULT_SIZE_BOUND)?.order();
    let presentation_order = group_order(&b, COSET_BOUND).finite();
    let ok = is_hom
        && presentation_order == Some(image_order)
        && image_order == 4 * (m * (m + 1)) as usize;
    Ok(MatrixIsoCheck {
        m,
        is_hom,
        image_order,
        presentation_order,
        ok,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct B23Report {
    pub p: u32,
    pub killed: Vec<String>,
    pub order: Option<usize>,
    pub expected_order: usize,
    pub abelian_invariants: Vec<i128>,
    pub index_of_a: Option<usize>,
    /// the quotient of the arrangement group against `b23_presentation(p)`
    pub presentation_iso: IsoCheck,
    pub matrix_iso: MatrixIsoCheck,
    pub discriminant: i128,
    pub complement_h1: Vec<i128>,
    pub ok: bool,
}

pub fn verify_b23(fx: &Fixtures, p: u32) -> Result<B23Report, VerifyError> {
    let q = p as usize + 3;
    let pl = b23_pipeline_from(&fx.arrangement()?, &fx.b23_pipeline, p)?;
    let order = group_order(&pl.g1, COSET_BOUND).finite();
    let abelian_invariants = abelian_invariants(&pl.g1);
    let b = b23_presentation(p);
    let index_of_a = coset_enumerate(&b, &[Word::gen(0)], COSET_BOUND).index();
    let presentation_iso = check_isomorphism(&pl.g1, &b, &pl.to_b23, &pl.from_b23);
    let matrix_iso = check_matrix_isomorphism(p + 2)?;
    let discriminant = discriminant_group(&family_graph(&Family::B23 { p })?)?.order;
    let complement_h1 = run_script(&fx.script(resgraph::ModelFamily::B23)?, p)?.h1()?;
    let expected_order = 4 * (q - 1) * q;
    let ab_order: i128 = abelian_invariants.iter().product();
    let h1_order: i128 = complement_h1.iter().product();
    let ok = order == Some(expected_order)
        && ab_order == 4 * q as i128
        && index_of_a == Some(2)
        && presentation_iso.ok
        && matrix_iso.ok
        && discriminant == 16 * (q as i128).pow(2)
        && complement_h1 == abelian_invariants
        && h1_order * h1_order == discriminant;
    Ok(B23Report {
        p,
        killed: pl.killed.iter().map(|(l, _)| l.clone()).collect(),
        order,
        expected_order,
        abelian_invariants,
        index_of_a,
        presentation_iso,
        matrix_iso,
        discriminant,
        complement_h1,
        ok,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct C23Report {
    pub p: u32,
    /// abelianization of the curve-complement group after killing `T₀`
    pub abelian_invariants: Vec<i128>,
    pub equivalence_certificate: bool,
    /// `[q, cqc] = 1` and then `[q, c] = 1` derived from the target relators
    pub abelian_certificate: bool,
    pub complement_h1: Vec<i128>,
    pub discriminant: i128,
    pub ok: bool,
}

pub fn verify_c23(fx: &Fixtures, p: u32) -> Result<C23Report, VerifyError> {
    let pl = c23_pipeline_from(&fx.c23_monodromy)?;
    let certs = c23_certificates_from(&fx.c23_tietze)?;
    let equivalence_certificate = pl.verify(&certs).is_ok();
    let abelian_certificate = match certs.lemmas.check() {
        Ok(words) => {
            let base = Presentation::from_doc(&certs.lemmas.base).map_err(PipelineError::from)?;
            let qc = base.word("[q,c]").map_err(PipelineError::from)?;
            words.last() == Some(&qc)
        }
        Err(_) => false,
    };
    let abelian_invariants = abelian_invariants(&pl.group);
    let complement_h1 = run_script(&fx.script(resgraph::ModelFamily::C23)?, p)?.h1()?;
    let discriminant = discriminant_group(&family_graph(&Family::C23 { p })?)?.order;
    let order = 3 * (p as i128 + 3);
    let ok = equivalence_certificate
        && abelian_certificate
        && abelian_invariants == [0, 0]
        && complement_h1 == [order]
        && discriminant == order * order;
    Ok(C23Report {
        p,
        abelian_invariants,
        equivalence_certificate,
        abelian_certificate,
        complement_h1,
        discriminant,
        ok,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct C33Report {
    pub p: u32,
    pub complement_h1: Vec<i128>,
    pub discriminant: i128,
    pub ok: bool,
}

pub fn verify_c33(fx: &Fixtures, p: u32) -> Result<C33Report, VerifyError> {
    let complement_h1 = run_script(&fx.script(resgraph::ModelFamily::C33)?, p)?.h1()?;
    let discriminant = discriminant_group(&family_graph(&Family::C33 { p })?)?.order;
    let order = 2 * (p as i128 + 4);
    let ok = complement_h1 == [order] && discriminant == order * order;
    Ok(C33Report {
        p,
        complement_h1,
        discriminant,
        ok,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MatgroupCheck {
    pub m: u32,
    pub report: MatgroupReport,
    /// `(SⁱT)² = S^{−m(2i−1)}` for every `i` mod `N`
    pub sit_squares: bool,
    /// `S`, `T` fix `xw + yz` and rescale `zw + x^{2m} + ζy^{2m}` by `ω^{−2m}`, `ζ`
    pub invariance: bool,
    pub sylow_ok: bool,
    pub g1_iso: MatrixIsoCheck,
    /// the variant with `T′`
    pub prime: MatgroupReport,
    pub ok: bool,
}

pub fn verify_matgroup(m: u32) -> Result<MatgroupCheck, VerifyError> {
    let report = matgroup::report(m, Variant::G)?;
    let prime = matgroup::report(m, Variant::GPrime)?;
    let (s, t) = make_generators(m, Variant::G)?;
    let n = modulus(m) as i64;
    let mi = m as i64;
    let sit_squares = (0..n).all(|i| {
        let x = s.pow(i).mul(&t);
        x.mul(&x) == s.pow(-mi * (2 * i - 1))
    });
    let invariance = check_invariance(m, &s, &t)?;
    let sylow_ok = report.sylow.as_ref().is_some_and(|y| {
        let two_part = 1usize << (y.r + 2);
        let kind = if m % 2 == 1 {
            format!("C{two_part}")
        } else {
            format!("Q{}", y.r + 2)
        };
        y.h_normal
            && y.h_is_odd_part
            && y.complement
            && y.h_order * y.j_order == report.order
            && y.j_order == two_part
            && y.kind == kind
            && y.j_normal == m.is_power_of_two()
            && (y.split == "direct") == m.is_power_of_two()
    });
    let g1_iso = check_matrix_isomorphism(m)?;
    let mu = m as usize;
    let ab = if m % 2 == 1 {
        vec![4 * (m as i128 + 1)]
    } else {
        vec![2, 2 * (m as i128 + 1)]
    };
    let prime_ok = m.is_multiple_of(2) || (!prime.fpf && prime.witness_order == Some(2));
    let ok = report.order == 4 * mu * (mu + 1)
        && report.center == 2 * (mu + 1)
        && report.ab == ab
        && report.fpf
        && sit_squares
        && invariance
        && sylow_ok
        && g1_iso.ok
        && prime_ok;
    Ok(MatgroupCheck {
        m,
        report,
        sit_squares,
        invariance,
        sylow_ok,
        g1_iso,
        prime,
        ok,
    })
}

fn check_invariance(m: u32, s: &MonomialElement, t: &MonomialElement) -> Result<bool, VerifyError> {
    let n = modulus(m);
    let opts = ParseOptions::new(&["x", "y", "z", "w"]).with_root(n, &[("zeta", m)]);
    let f = parse_polynomial("x*w + y*z", &opts)?;
    let y = parse_polynomial(&format!("z*w + x^{0} + zeta*y^{0}", 2 * m), &opts)?;
    let one = crate::polyalg::rational(1, 1);
    Ok(polynomial_action(s, &f) == f
        && polynomial_action(t, &f) == f
        && polynomial_action(t, &y).is_scalar_multiple(&y) == Some((one.clone(), m))
        && polynomial_action(s, &y).is_scalar_multiple(&y) == Some((one, n - 2 * m)))
}

/// Polynomial checks on the conic + cubic configuration.
#[derive(Clone, Debug, Serialize)]
pub struct PolyReport {
    pub curve: String,
    pub tangent_cone: String,
    pub vanishing: Vec<(String, bool)>,
    pub pullback_degree: Option<u64>,
    pub pullback_cofactor: Option<String>,
    pub ok: bool,
}

const XYZ: [&str; 3] = ["x", "y", "z"];

/// The sextic in weights `(1, 1, 3)` whose zero set is the conic and the
/// cubic in the weighted plane.
pub const C23_CURVE: &str = "z^2 - 2*(x^3 + 3*x^2*y - 3*x*y^2 - y^3)*z + (x+y)^6";
pub const PSI: [&str; 3] = ["y - x", "x + y", "8*(y^2*z - x^2*(x+z))"];
pub const CONIC: &str = "y^2 + (x+z)*(2*x+z)";

pub fn verify_poly() -> Result<PolyReport, VerifyError> {
    let f = SparsePolynomial::parse(C23_CURVE, &XYZ)?;
    let chart = PolyMap::parse(&["1", "u", "v + 1"], &["u", "v"])?;
    let cone = tangent_cone(&f, &chart)?;
    let expected_cone = SparsePolynomial::parse("21*u^2 - 6*u*v + v^2", &["u", "v"])?;
    let zero = crate::polyalg::rational(0, 1);
    let vanishing: Vec<(String, bool)> = [[3, -1, -8], [1, -3, -8], [1, 0, 1], [0, -1, 1]]
        .iter()
        .map(|v| {
            let pt: Vec<_> = v.iter().map(|&a| crate::polyalg::rational(a, 1)).collect();
            (
                format!("[{}:{}:{}]", v[0], v[1], v[2]),
                f.evaluate(&pt) == Some(zero.clone()),
            )
        })
        .collect();
    let pb = f.substitute(&PolyMap::parse(&PSI, &XYZ)?)?;
    let cofactor = pb.divide_exact(&SparsePolynomial::parse(CONIC, &XYZ)?);
    let ok = cone == expected_cone && vanishing.iter().all(|(_, z)| *z) && cofactor.is_some();
    Ok(PolyReport {
        curve: f.to_string(),
        tangent_cone: cone.to_string(),
        vanishing,
        pullback_degree: pb.total_degree(),
        pullback_cofactor: cofactor.map(|c| c.to_string()),
        ok,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AllReport {
    pub b23: Vec<B23Report>,
    pub c23: Vec<C23Report>,
    pub c33: Vec<C33Report>,
    pub matgroup: Vec<MatgroupCheck>,
    pub poly: PolyReport,
    pub ok: bool,
}

/// Every check for `p = 0..=max_p` and `m = 2..=max_m`.
pub fn verify_all(fx: &Fixtures, max_p: u32, max_m: u32) -> Result<AllReport, VerifyError> {
    let b23 = (0..=max_p)
        .map(|p| verify_b23(fx, p))
        .collect::<Result<Vec<_>, _>>()?;
    let c23 = (0..=max_p)
        .map(|p| verify_c23(fx, p))
        .collect::<Result<Vec<_>, _>>()?;
    let c33 = (0..=max_p)
        .map(|p| verify_c33(fx, p))
        .collect::<Result<Vec<_>, _>>()?;
    let matgroup = (2..=max_m)
        .map(verify_matgroup)
        .collect::<Result<Vec<_>, _>>()?;
    let poly = verify_poly()?;
    let ok = b23.iter().all(|r| r.ok)
        && c23.iter().all(|r| r.ok)
        && c33.iter().all(|r| r.ok)
        && matgroup.iter().all(|r| r.ok)
        && poly.ok;
    Ok(AllReport {
        b23,
        c23,
        c33,
        matgroup,
        poly,
        ok,
    })
}
