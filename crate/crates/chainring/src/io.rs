//! JSON objects and text encodings for every domain type.
//!
//! Rings serialize as `{"family","p","n","s","modulus":[ints]}`; elements as
//! flat coefficient arrays (nested arrays, one per power of u, for the
//! equal-characteristic family); matrices as arrays of element rows; towers
//! as `{"base", "m", "modulus_top"}` with extension elements optionally in
//! alpha-coordinates over the base encoding; codes as
//! `{"tower","length","rsf","type"}`; cyclic contexts carry cosets, lifted
//! factors and idempotents with constant-term-first coefficient arrays.

use crate::code::Code;
use crate::cyclic::{CyclicContext, DefiningSet};
use crate::error::{Error, Result};
use crate::ext::Tower;
use crate::linalg::Mat;
use crate::poly::RingPoly;
use crate::ring::{Element, Family, Ring};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingDto {
    pub family: String,
    pub p: u64,
    pub n: usize,
    pub s: usize,
    pub modulus: Vec<u64>,
}

pub fn ring_to_dto(ring: &Ring) -> RingDto {
    RingDto {
        family: ring.family().as_str().to_string(),
        p: ring.p(),
        n: ring.n(),
        s: ring.s(),
        modulus: ring.modulus().to_vec(),
    }
}

pub fn ring_from_dto(dto: &RingDto) -> Result<Ring> {
    Ring::make(
        Family::parse(&dto.family)?,
        dto.p,
        dto.n,
        dto.s,
        Some(dto.modulus.clone()),
    )
}

/// Element wire form: flat for the unramified family, nested (one array per
/// power of u) for the equal-characteristic family.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementDto {
    Flat(Vec<u64>),
    Nested(Vec<Vec<u64>>),
}

pub fn element_to_dto(e: &Element) -> ElementDto {
    let ring = e.ring();
    match ring.family() {
        Family::Unramified => ElementDto::Flat(e.coeffs().to_vec()),
        Family::EqualChar => {
            let n = ring.n();
            ElementDto::Nested(
                (0..ring.s())
                    .map(|t| e.coeffs()[t * n..(t + 1) * n].to_vec())
                    .collect(),
            )
        }
    }
}

pub fn element_from_dto(ring: &Ring, dto: &ElementDto) -> Result<Element> {
    match (ring.family(), dto) {
        (Family::Unramified, ElementDto::Flat(v)) => ring.element(v.clone()),
        (Family::EqualChar, ElementDto::Nested(blocks)) => {
            if blocks.len() != ring.s() || blocks.iter().any(|b| b.len() != ring.n()) {
                return Err(Error::Parse(
                    "equal-characteristic element must have s blocks of n entries".into(),
                ));
            }
            ring.element(blocks.concat())
        }
        _ => Err(Error::Parse(
            "element encoding does not match the ring family".into(),
        )),
    }
}

pub fn matrix_to_dto(m: &Mat) -> Vec<Vec<ElementDto>> {
    (0..m.nrows())
        .map(|i| m.row(i).iter().map(element_to_dto).collect())
        .collect()
}

pub fn matrix_from_dto(ring: &Ring, dto: &[Vec<ElementDto>], cols_hint: Option<usize>) -> Result<Mat> {
    let rows: Vec<Vec<Element>> = dto
        .iter()
        .map(|row| row.iter().map(|e| element_from_dto(ring, e)).collect())
        .collect::<Result<_>>()?;
    if rows.is_empty() {
        let cols = cols_hint.ok_or_else(|| {
            Error::Parse("cannot infer the width of an empty matrix".into())
        })?;
        return Mat::new(ring, 0, cols, Vec::new());
    }
    Mat::from_rows(ring, rows)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TowerDto {
    pub base: RingDto,
    pub m: usize,
    pub modulus_top: Vec<u64>,
}

pub fn tower_to_dto(t: &Tower) -> TowerDto {
    TowerDto {
        base: ring_to_dto(t.base()),
        m: t.m(),
        modulus_top: t.top().modulus().to_vec(),
    }
}

pub fn tower_from_dto(dto: &TowerDto) -> Result<Tower> {
    let base = ring_from_dto(&dto.base)?;
    let t = Tower::extend(&base, dto.m)?;
    if t.top().modulus() != dto.modulus_top.as_slice() {
        return Err(Error::Parse(
            "tower top modulus differs from the canonical extension".into(),
        ));
    }
    Ok(t)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeDto {
    pub tower: TowerDto,
    pub length: usize,
    pub rsf: Vec<Vec<ElementDto>>,
    #[serde(rename = "type")]
    pub ctype: Vec<usize>,
}

pub fn code_to_dto(c: &Code) -> CodeDto {
    CodeDto {
        tower: tower_to_dto(c.tower()),
        length: c.length(),
        rsf: matrix_to_dto(c.rsf()),
        ctype: c.code_type().to_vec(),
    }
}

pub fn code_from_dto(dto: &CodeDto) -> Result<Code> {
    let tower = tower_from_dto(&dto.tower)?;
    let rsf = matrix_from_dto(tower.top(), &dto.rsf, Some(dto.length))?;
    if rsf.ncols() != dto.length {
        return Err(Error::LengthMismatch {
            expected: dto.length,
            got: rsf.ncols(),
        });
    }
    let code = Code::from_rsf(&tower, rsf)?;
    if code.code_type() != dto.ctype.as_slice() {
        return Err(Error::Parse("stored type differs from the RSF type".into()));
    }
    Ok(code)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContextDto {
    pub ring: RingDto,
    pub ell: u64,
    pub cosets: Vec<Vec<u64>>,
    pub factors: Vec<Vec<ElementDto>>,
    pub idempotents: Vec<Vec<ElementDto>>,
}

fn poly_to_dto(p: &RingPoly) -> Vec<ElementDto> {
    p.coeffs().iter().map(element_to_dto).collect()
}

pub fn context_to_dto(ctx: &CyclicContext) -> ContextDto {
    ContextDto {
        ring: ring_to_dto(ctx.ring()),
        ell: ctx.ell(),
        cosets: ctx
            .table()
            .reps
            .iter()
            .map(|rep| ctx.table().cosets[rep].clone())
            .collect(),
        factors: ctx.factors().values().map(poly_to_dto).collect(),
        idempotents: ctx.idempotents().values().map(poly_to_dto).collect(),
    }
}

/// Rebuild a context from its (ring, ell) key and check that the stored
/// cosets, factors and idempotents match the canonical computation.
pub fn context_from_dto(dto: &ContextDto) -> Result<CyclicContext> {
    let ring = ring_from_dto(&dto.ring)?;
    let ctx = CyclicContext::new(&ring, dto.ell)?;
    let again = context_to_dto(&ctx);
    let canon = serde_json::to_string(&again).map_err(|e| Error::Parse(e.to_string()))?;
    let given = serde_json::to_string(dto).map_err(|e| Error::Parse(e.to_string()))?;
    if canon != given {
        return Err(Error::Parse(
            "context payload differs from the canonical computation".into(),
        ));
    }
    Ok(ctx)
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

/// Parse a matrix from text: rows separated by `;` or newlines, entries by
/// whitespace, each entry in the ring's text encoding.
pub fn parse_matrix_text(ring: &Ring, text: &str) -> Result<Mat> {
    let rows: Vec<&str> = text
        .split([';', '\n'])
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .collect();
    let parsed: Vec<Vec<Element>> = rows
        .iter()
        .map(|row| {
            row.split_whitespace()
                .map(|e| ring.parse_element(e))
                .collect()
        })
        .collect::<Result<_>>()?;
    if parsed.is_empty() {
        return Err(Error::Parse("empty matrix".into()));
    }
    Mat::from_rows(ring, parsed)
}

/// Parse a defining set "1,2,4" (or "{1,2,4}"; empty text means the empty
/// set).
pub fn parse_defining_set(ell: u64, text: &str) -> Result<DefiningSet> {
    let t = text.trim().trim_start_matches('{').trim_end_matches('}');
    if t.is_empty() {
        return DefiningSet::new(ell, []);
    }
    let members: Vec<u64> = t
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad defining set member `{x}`")))
        })
        .collect::<Result<_>>()?;
    DefiningSet::new(ell, members)
}

/// Render the type tuple as `(l;k0,...,k_{s-1})`.
pub fn type_string(code: &Code) -> String {
    let parts: Vec<String> = code.code_type().iter().map(|k| k.to_string()).collect();
    format!("({};{})", code.length(), parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rng::Rng;

    #[test]
    fn ring_json_roundtrip() {
        for name in fixtures::FIXTURE_NAMES {
            let r = fixtures::ring(name).unwrap();
            let dto = ring_to_dto(&r);
            let s = serde_json::to_string(&dto).unwrap();
            let back: RingDto = serde_json::from_str(&s).unwrap();
            assert_eq!(ring_from_dto(&back).unwrap(), r);
        }
    }

    #[test]
    fn element_json_roundtrip() {
        for name in ["z4", "gr42", "f2u2", "f8u2"] {
            let r = fixtures::ring(name).unwrap();
            let mut rng = Rng::new(4);
            for _ in 0..20 {
                let e = r.random(&mut rng);
                let dto = element_to_dto(&e);
                let s = serde_json::to_string(&dto).unwrap();
                let back: ElementDto = serde_json::from_str(&s).unwrap();
                assert_eq!(element_from_dto(&r, &back).unwrap(), e);
            }
        }
    }

    #[test]
    fn code_json_roundtrip() {
        let t = fixtures::tower("gr42").unwrap();
        let top = t.top().clone();
        let mut rng = Rng::new(8);
        let rows = (0..2)
            .map(|_| (0..3).map(|_| top.random(&mut rng)).collect())
            .collect();
        let c = Code::from_generators(&t, rows).unwrap();
        let dto = code_to_dto(&c);
        let s = serde_json::to_string(&dto).unwrap();
        let back: CodeDto = serde_json::from_str(&s).unwrap();
        assert_eq!(code_from_dto(&back).unwrap(), c);
    }

    #[test]
    fn context_json_roundtrip() {
        let ctx = CyclicContext::new(&fixtures::ring("z4").unwrap(), 7).unwrap();
        let dto = context_to_dto(&ctx);
        let s = serde_json::to_string(&dto).unwrap();
        let back: ContextDto = serde_json::from_str(&s).unwrap();
        let ctx2 = context_from_dto(&back).unwrap();
        assert_eq!(ctx2.ell(), 7);
    }

    #[test]
    fn matrix_text_parse() {
        let z4 = fixtures::ring("z4").unwrap();
        let m = parse_matrix_text(&z4, "2 2;1 1").unwrap();
        assert_eq!(m.nrows(), 2);
        assert_eq!(m.ncols(), 2);
        assert_eq!(*m.at(1, 0), z4.int(1));
        // the Display form parses back
        let text = m.to_string();
        assert_eq!(parse_matrix_text(&z4, &text).unwrap(), m);
        // tuple entries for extension rings
        let gr = fixtures::ring("gr42").unwrap();
        let m = parse_matrix_text(&gr, "0,1 1,0").unwrap();
        assert_eq!(m.ncols(), 2);
    }

    #[test]
    fn defining_set_parse() {
        let a = parse_defining_set(7, "1,2,4").unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(parse_defining_set(7, "{1,2,4}").unwrap(), a);
        assert!(parse_defining_set(7, "").unwrap().is_empty());
        assert!(parse_defining_set(7, "9").is_err());
    }
}
