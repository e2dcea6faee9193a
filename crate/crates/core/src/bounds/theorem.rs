use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::ProductKind;

/// One checkable statement about γ, γ_R, P₂ of graphs and their products.
///
/// Unary checks take one graph; `PFK2` pairs it with `K2` itself. Binary
/// checks take an ordered pair `(G, H)` and the product kind returned by
/// [`TheoremId::product_kind`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// γ(G) ≤ γ_R(G) ≤ 2γ(G)
    L1Sandwich,
    /// |B2| ≤ γ_R(G) − γ(G) for every γ_R-function
    L2B2,
    /// |B1| ≥ 2γ(G) − γ_R(G) for every γ_R-function
    L2B1,
    /// γ_R(G□H) ≥ γ(G)γ(H)
    EqChino,
    /// γ_R(G□H) ≥ 2γ(G)γ_R(H)/3
    TLowerI,
    /// γ_R(G□H) ≥ (γ(G)γ_R(H) + γ(G□H))/2
    TLowerII,
    /// γ_R(G□H) ≥ γ_R(G)γ_R(H)/3
    CRR3,
    /// γ(G□H) ≥ γ(G)γ_R(H)/3
    CGR3,
    /// γ(G□H) ≥ γ(G)γ(H)/2
    EqCasiVizing,
    /// γ_R(H) > 3γ(H)/2 ⇒ γ(G□H) ≥ γ(G)γ(H)/2 + γ(G)/3
    RImprovedVizing,
    /// H Roman ⇒ γ_R(G□H) ≥ 4γ(G)γ(H)/3
    CRomanI,
    /// H Roman ⇒ γ(G□H) ≥ 2γ(G)γ(H)/3
    CRomanII,
    /// G has a perfect code ⇒ γ_R(G□H) ≥ max{γ(G)(γ_R(H)+γ(H)), γ(H)(γ_R(G)+γ(G))}/2
    CFHalfmax,
    /// G has a perfect code ⇒ γ_R(G□H) ≥ γ(G)γ_R(H)
    TFLower,
    /// G has a perfect code, H Roman ⇒ γ_R(G□H) ≥ 2γ(G)γ(H)
    CFRoman,
    /// γ_R(G□H) ≤ min{n1 γ_R(H), n2 γ_R(G)}
    TSuperior,
    /// γ_R(G□H) ≤ 2 min{n1 γ(H), n2 γ(G)}
    CSuperior2g,
    /// G has a component of order ≥ 3 ⇒ γ_R(G□H) ≤ (n1+1)γ_R(H) − 2γ(H)
    TEldekI,
    /// G Roman ⇒ γ_R(G□H) ≤ 2n1(γ_R(H) − γ(H)) + 2γ(G)(2γ(H) − γ_R(H))
    TEldekII,
    /// G has a component of order ≥ 3, H not Roman ⇒ γ_R(G□H) ≤ n1 γ_R(H) − 1
    CNonroman,
    /// G connected ⇒ (γ_R(G) = γ(G) + 1 ⇔ some vertex has degree n − γ(G))
    PGammaPlus1,
    /// G has a component of order ≥ 3, H connected with a vertex of degree
    /// n2 − γ(H) ⇒ γ_R(G□H) ≤ n1(γ(H) + 1) − γ(H) + 1
    PCorochulo,
    /// γ_R(G□H) ≤ 2γ(G)γ(H) + (n1 − γ(G))(n2 − γ(H))
    TFlojito,
    /// G has a perfect code, minimum degree δ ⇒ γ(G) ≤ n/(δ+1), with equality if δ-regular
    RFRegular,
    /// G δ-regular with a perfect code ⇒ 2n/(δ+1) ≤ γ_R(G□K2) ≤ 4n/(δ+1)
    PFK2,
    /// max{P₂(G)γ(H), γ(G)P₂(H)} ≤ γ(G⊠H) ≤ γ(G)γ(H)
    TStrongSandwich,
    /// G has a perfect code ⇒ γ(G⊠H) = γ(G)γ(H)
    CStrongFEq,
    /// max{P₂(G)γ(H), γ(G)P₂(H)} ≤ γ_R(G⊠H) ≤ 2γ(G)γ(H)
    CColoroco,
    /// γ_R(G⊠H) ≤ γ_R(G)γ_R(H) − 2|A2||B2|, maximized over γ_R-function pairs
    TStrongMinus,
    /// G, H with edges ⇒ γ_R(G⊠H) ≤ γ_R(G)γ_R(H) − 2
    CStrongMinus2,
    /// G with an edge, H = P_n or C_n ⇒ γ_R(G⊠H) ≤ γ_R(H)γ_R(G) − 2⌊n/3⌋
    CStrongPncn,
    /// G has a perfect code ⇒ γ_R(G⊠H) ≥ γ(G)γ_R(H)
    TStrongFLower,
    /// G has a perfect code, H Roman ⇒ G⊠H Roman
    CStrongRomanClosed,
}

use TheoremId::*;

const TABLE: [(TheoremId, &str); 33] = [
    (L1Sandwich, "L1-sandwich"),
    (L2B2, "L2-B2"),
    (L2B1, "L2-B1"),
    (EqChino, "EQ-chino"),
    (TLowerI, "T-lower-i"),
    (TLowerII, "T-lower-ii"),
    (CRR3, "C-RR3"),
    (CGR3, "C-gR3"),
    (EqCasiVizing, "EQ-casi-vizing"),
    (RImprovedVizing, "R-improved-vizing"),
    (CRomanI, "C-roman-i"),
    (CRomanII, "C-roman-ii"),
    (CFHalfmax, "C-F-halfmax"),
    (TFLower, "T-F-lower"),
    (CFRoman, "C-F-roman"),
    (TSuperior, "T-superior"),
    (CSuperior2g, "C-superior-2g"),
    (TEldekI, "T-eldek-i"),
    (TEldekII, "T-eldek-ii"),
    (CNonroman, "C-nonroman"),
    (PGammaPlus1, "P-gamma-plus-1"),
    (PCorochulo, "P-corochulo"),
    (TFlojito, "T-flojito"),
    (RFRegular, "R-F-regular"),
    (PFK2, "P-F-K2"),
    (TStrongSandwich, "T-strong-sandwich"),
    (CStrongFEq, "C-strong-F-eq"),
    (CColoroco, "C-coroloco"),
    (TStrongMinus, "T-strong-minus"),
    (CStrongMinus2, "C-strong-minus-2"),
    (CStrongPncn, "C-strong-pncn"),
    (TStrongFLower, "T-strong-F-lower"),
    (CStrongRomanClosed, "C-strong-roman-closed"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    Unary,
    Binary,
}

impl TheoremId {
    /// Every check, in report order.
    pub fn all() -> impl Iterator<Item = TheoremId> {
        TABLE.iter().map(|&(id, _)| id)
    }

    pub fn as_str(self) -> &'static str {
        TABLE
            .iter()
            .find(|&&(id, _)| id == self)
            .map(|&(_, name)| name)
            .expect("every id is in the table")
    }

    pub fn arity(self) -> Arity {
        match self {
            L1Sandwich | L2B2 | L2B1 | PGammaPlus1 | RFRegular | PFK2 => Arity::Unary,
            _ => Arity::Binary,
        }
    }

    /// Product the check is about, if any.
    pub fn product_kind(self) -> Option<ProductKind> {
        match self {
            L1Sandwich | L2B2 | L2B1 | PGammaPlus1 | RFRegular => None,
            TStrongSandwich | CStrongFEq | CColoroco | TStrongMinus | CStrongMinus2 | CStrongPncn
            | TStrongFLower | CStrongRomanClosed => Some(ProductKind::Strong),
            _ => Some(ProductKind::Cartesian),
        }
    }

    /// Parses a comma-separated list; `all` selects every check and `L1`
    /// abbreviates `L1-sandwich`.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(TheoremId::all());
            } else {
                out.push(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidParams("empty theorem list".into()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "L1" {
            return Ok(L1Sandwich);
        }
        TABLE
            .iter()
            .find(|&&(_, name)| name == s)
            .map(|&(id, _)| id)
            .ok_or_else(|| Error::InvalidParams(format!("unknown theorem id '{s}'")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        assert_eq!(TheoremId::all().count(), 33);
        for id in TheoremId::all() {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
    }

    #[test]
    fn table_order_matches_enum_order() {
        let ids: Vec<_> = TheoremId::all().collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn parse_list_sorts_and_rejects_unknown() {
        assert_eq!(
            TheoremId::parse_list("L2-B1,L1-sandwich,L2-B1").unwrap(),
            vec![L1Sandwich, L2B1]
        );
        assert!(TheoremId::parse_list("NO-SUCH").is_err());
        assert_eq!(TheoremId::parse_list("L1").unwrap(), vec![L1Sandwich]);
        assert_eq!(TheoremId::parse_list("all").unwrap().len(), 33);
    }
}
