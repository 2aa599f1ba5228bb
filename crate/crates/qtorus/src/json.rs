//! JSON wire formats for elements, tensors and derivation tables.
//!
//! All coefficients travel as strings in the `RatFunc` text grammar.
//! Serialization is canonical (terms in basis order, coefficients in
//! canonical text), so serialize-then-parse is the identity on values and
//! parse-then-serialize is the identity on canonical documents.
//!
//! Documents are untrusted input: every field is validated, terms with the
//! formally-zero symbols `g(0,0)` / `h(0,0)` collapse to zero, and parse
//! errors carry a position.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgElement, BasisVector, Degree};
use crate::derivation::DerivationTable;
use crate::laurent::{ParseError, RatFunc};
use crate::tensor::{Tensor2Element, Tensor3Element};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: unknown basis kind `{kind}` (expected e, f, g, h, d, d1 or d2)")]
    UnknownKind { path: String, kind: String },
    #[error("{path}: kind `{kind}` requires an index")]
    MissingIndex { path: String, kind: String },
    #[error("{path}: kind `{kind}` does not take an index")]
    UnexpectedIndex { path: String, kind: String },
    #[error("{path}: invalid coefficient: {source}")]
    Coeff {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error("window must be non-negative, got {0}")]
    BadWindow(i64),
}

#[derive(Serialize, Deserialize)]
struct BasisDoc {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<[i64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct ElementTermDoc {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<[i64; 2]>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementDoc {
    terms: Vec<ElementTermDoc>,
}

#[derive(Serialize, Deserialize)]
struct Tensor2TermDoc {
    left: BasisDoc,
    right: BasisDoc,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct Tensor2Doc {
    terms: Vec<Tensor2TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct Tensor3TermDoc {
    left: BasisDoc,
    mid: BasisDoc,
    right: BasisDoc,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct Tensor3Doc {
    terms: Vec<Tensor3TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct AssignmentDoc {
    basis: BasisDoc,
    image: Tensor2Doc,
}

#[derive(Serialize, Deserialize)]
struct TableDoc {
    window: i64,
    assignments: Vec<AssignmentDoc>,
}

fn kind_of(b: &BasisVector) -> (&'static str, Option<[i64; 2]>) {
    match b {
        BasisVector::D => ("d", None),
        BasisVector::D1 => ("d1", None),
        BasisVector::D2 => ("d2", None),
        BasisVector::E(Degree(a, b)) => ("e", Some([*a, *b])),
        BasisVector::F(Degree(a, b)) => ("f", Some([*a, *b])),
        BasisVector::G(Degree(a, b)) => ("g", Some([*a, *b])),
        BasisVector::H(Degree(a, b)) => ("h", Some([*a, *b])),
    }
}

/// Decode a basis descriptor. `g`/`h` at index `(0,0)` decode to `None`:
/// the formal symbol denotes zero and the containing term is dropped.
fn basis_from(
    kind: &str,
    index: Option<[i64; 2]>,
    path: &str,
) -> Result<Option<BasisVector>, FormatError> {
    let need_index = |index: Option<[i64; 2]>| {
        index.ok_or_else(|| FormatError::MissingIndex { path: path.to_string(), kind: kind.to_string() })
    };
    let b = match kind {
        "d" | "d1" | "d2" => {
            if index.is_some() {
                return Err(FormatError::UnexpectedIndex {
                    path: path.to_string(),
                    kind: kind.to_string(),
                });
            }
            match kind {
                "d" => BasisVector::D,
                "d1" => BasisVector::D1,
                _ => BasisVector::D2,
            }
        }
        "e" | "f" | "g" | "h" => {
            let [a, b] = need_index(index)?;
            let deg = Degree(a, b);
            match kind {
                "e" => BasisVector::E(deg),
                "f" => BasisVector::F(deg),
                "g" => BasisVector::G(deg),
                _ => BasisVector::H(deg),
            }
        }
        other => {
            return Err(FormatError::UnknownKind { path: path.to_string(), kind: other.to_string() })
        }
    };
    Ok((!b.is_zero_symbol()).then_some(b))
}

fn coeff_from(text: &str, path: &str) -> Result<RatFunc, FormatError> {
    text.parse()
        .map_err(|source| FormatError::Coeff { path: path.to_string(), source })
}

// ---- elements ------------------------------------------------------------

pub fn parse_element(text: &str) -> Result<AlgElement, FormatError> {
    let doc: ElementDoc = serde_json::from_str(text)?;
    let mut out = AlgElement::zero();
    for (i, term) in doc.terms.iter().enumerate() {
        let path = format!("terms[{i}]");
        let coeff = coeff_from(&term.coeff, &path)?;
        if let Some(b) = basis_from(&term.kind, term.index, &path)? {
            out.add_term(b, coeff);
        }
    }
    Ok(out)
}

pub fn element_to_string(x: &AlgElement) -> String {
    let terms = x
        .terms()
        .map(|(b, c)| {
            let (kind, index) = kind_of(b);
            ElementTermDoc { kind: kind.to_string(), index, coeff: c.to_string() }
        })
        .collect();
    serde_json::to_string(&ElementDoc { terms }).expect("serialization cannot fail")
}

// ---- pair tensors ---------------------------------------------------------

pub fn parse_tensor2(text: &str) -> Result<Tensor2Element, FormatError> {
    let doc: Tensor2Doc = serde_json::from_str(text)?;
    let mut out = Tensor2Element::zero();
    for (i, term) in doc.terms.iter().enumerate() {
        let path = format!("terms[{i}]");
        let coeff = coeff_from(&term.coeff, &path)?;
        let left = basis_from(&term.left.kind, term.left.index, &format!("{path}.left"))?;
        let right = basis_from(&term.right.kind, term.right.index, &format!("{path}.right"))?;
        if let (Some(a), Some(b)) = (left, right) {
            out.add_term(a, b, coeff);
        }
    }
    Ok(out)
}

fn basis_doc(b: &BasisVector) -> BasisDoc {
    let (kind, index) = kind_of(b);
    BasisDoc { kind: kind.to_string(), index }
}

pub fn tensor2_to_string(t: &Tensor2Element) -> String {
    let terms = t
        .terms()
        .map(|((a, b), c)| Tensor2TermDoc {
            left: basis_doc(a),
            right: basis_doc(b),
            coeff: c.to_string(),
        })
        .collect();
    serde_json::to_string(&Tensor2Doc { terms }).expect("serialization cannot fail")
}

// ---- triple tensors -------------------------------------------------------

pub fn parse_tensor3(text: &str) -> Result<Tensor3Element, FormatError> {
    let doc: Tensor3Doc = serde_json::from_str(text)?;
    let mut out = Tensor3Element::zero();
    for (i, term) in doc.terms.iter().enumerate() {
        let path = format!("terms[{i}]");
        let coeff = coeff_from(&term.coeff, &path)?;
        let left = basis_from(&term.left.kind, term.left.index, &format!("{path}.left"))?;
        let mid = basis_from(&term.mid.kind, term.mid.index, &format!("{path}.mid"))?;
        let right = basis_from(&term.right.kind, term.right.index, &format!("{path}.right"))?;
        if let (Some(a), Some(b), Some(c)) = (left, mid, right) {
            out.add_term(a, b, c, coeff);
        }
    }
    Ok(out)
}

pub fn tensor3_to_string(t: &Tensor3Element) -> String {
    let terms = t
        .terms()
        .map(|((a, b, c), k)| Tensor3TermDoc {
            left: basis_doc(a),
            mid: basis_doc(b),
            right: basis_doc(c),
            coeff: k.to_string(),
        })
        .collect();
    serde_json::to_string(&Tensor3Doc { terms }).expect("serialization cannot fail")
}

// ---- derivation tables ----------------------------------------------------

pub fn parse_table(text: &str) -> Result<DerivationTable, FormatError> {
    let doc: TableDoc = serde_json::from_str(text)?;
    if doc.window < 0 {
        return Err(FormatError::BadWindow(doc.window));
    }
    let mut out = DerivationTable::new(doc.window);
    for (i, assignment) in doc.assignments.iter().enumerate() {
        let path = format!("assignments[{i}]");
        let basis =
            basis_from(&assignment.basis.kind, assignment.basis.index, &format!("{path}.basis"))?;
        let mut image = Tensor2Element::zero();
        for (j, term) in assignment.image.terms.iter().enumerate() {
            let tpath = format!("{path}.image.terms[{j}]");
            let coeff = coeff_from(&term.coeff, &tpath)?;
            let left = basis_from(&term.left.kind, term.left.index, &format!("{tpath}.left"))?;
            let right = basis_from(&term.right.kind, term.right.index, &format!("{tpath}.right"))?;
            if let (Some(a), Some(b)) = (left, right) {
                image.add_term(a, b, coeff);
            }
        }
        if let Some(b) = basis {
            out.assign(b, image);
        }
    }
    Ok(out)
}

pub fn table_to_string(t: &DerivationTable) -> String {
    let assignments = t
        .assignments()
        .map(|(b, image)| AssignmentDoc {
            basis: basis_doc(b),
            image: Tensor2Doc {
                terms: image
                    .terms()
                    .map(|((a, b), c)| Tensor2TermDoc {
                        left: basis_doc(a),
                        right: basis_doc(b),
                        coeff: c.to_string(),
                    })
                    .collect(),
            },
        })
        .collect();
    serde_json::to_string(&TableDoc { window: t.window(), assignments })
        .expect("serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::inner_derivation;
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn element_examples() {
        let x = parse_element(r#"{"terms":[{"kind":"d","coeff":"1"}]}"#).unwrap();
        assert_eq!(x, AlgElement::d());

        // The zero-symbol convention: g at (0,0) parses to zero.
        let x = parse_element(r#"{"terms":[{"kind":"g","index":[0,0],"coeff":"q^2"}]}"#).unwrap();
        assert!(x.is_zero());

        let err = parse_element(r#"{"terms":[{"kind":"d","coeff":"q^"}]}"#).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("column 3"), "unhelpful error: {msg}");

        let err =
            parse_element(r#"{"terms":[{"kind":"x","index":[0,0],"coeff":"1"}]}"#).unwrap_err();
        assert!(matches!(err, FormatError::UnknownKind { .. }));

        let err = parse_element(r#"{"terms":[{"kind":"e","coeff":"1"}]}"#).unwrap_err();
        assert!(matches!(err, FormatError::MissingIndex { .. }));

        let err =
            parse_element(r#"{"terms":[{"kind":"d1","index":[1,0],"coeff":"1"}]}"#).unwrap_err();
        assert!(matches!(err, FormatError::UnexpectedIndex { .. }));
    }

    #[test]
    fn canonical_element_text() {
        let x = AlgElement::e(1, 0)
            .scaled(&RatFunc::q_pow(2))
            .add(&AlgElement::d1());
        let text = element_to_string(&x);
        assert_eq!(
            text,
            r#"{"terms":[{"kind":"d1","coeff":"1"},{"kind":"e","index":[1,0],"coeff":"q^2"}]}"#
        );
        assert_eq!(parse_element(&text).unwrap(), x);
    }

    #[test]
    fn duplicate_terms_merge() {
        let x = parse_element(
            r#"{"terms":[{"kind":"d","coeff":"q"},{"kind":"d","coeff":"-q"}]}"#,
        )
        .unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn malformed_json_reports_location() {
        let err = parse_element("{nonsense").unwrap_err();
        assert!(err.to_string().contains("line 1"));
    }

    #[test]
    fn tensor_round_trips_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..50 {
            let x = sample::element(&mut rng, 2, 3);
            assert_eq!(parse_element(&element_to_string(&x)).unwrap(), x);

            let t = sample::tensor2(&mut rng, 2, 3);
            assert_eq!(parse_tensor2(&tensor2_to_string(&t)).unwrap(), t);

            let u = sample::tensor3(&mut rng, 2, 3);
            assert_eq!(parse_tensor3(&tensor3_to_string(&u)).unwrap(), u);
        }
    }

    #[test]
    fn table_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let v = sample::tensor2(&mut rng, 1, 3);
        let table = inner_derivation(&v, 1);
        let text = table_to_string(&table);
        assert_eq!(parse_table(&text).unwrap(), table);
        // Parsed canonical text re-serializes identically.
        assert_eq!(table_to_string(&parse_table(&text).unwrap()), text);
    }

    #[test]
    fn bad_window_rejected() {
        let err = parse_table(r#"{"window":-1,"assignments":[]}"#).unwrap_err();
        assert!(matches!(err, FormatError::BadWindow(-1)));
    }
}
