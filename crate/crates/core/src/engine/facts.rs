//! Geometric inputs that the engine assumes rather than computes.

use serde::Serialize;

use super::transcript::CaseTag;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Axiom {
    pub id: &'static str,
    pub hypothesis: &'static str,
    /// Conclusions the engine may branch on.
    pub conclusions: &'static [&'static str],
    pub source: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactTable {
    pub axioms: Vec<Axiom>,
}

const AXIOMS: &[Axiom] = &[
    Axiom {
        id: "tame-purely-non-symplectic",
        hypothesis: "tame automorphism of order 66 of a K3 surface",
        conclusions: &["ord(g) = 1.66"],
        source: "orders of tame automorphisms of K3 surfaces",
    },
    Axiom {
        id: "primitive-eigenvalue",
        hypothesis: "tame non-symplectic automorphism whose action on the 2-form has order n",
        conclusions: &["a primitive n-th root of unity is an eigenvalue on H^2"],
        source: "integrality of the characteristic polynomial of g* on H^2",
    },
    Axiom {
        id: "invariant-ample-class",
        hypothesis: "finite-order automorphism of a projective K3 surface",
        conclusions: &["1 is an eigenvalue on H^2"],
        source: "averaging an ample class",
    },
    Axiom {
        id: "faithful-representation",
        hypothesis: "automorphism of a K3 surface",
        conclusions: &["the order of g on H^2 equals ord(g)"],
        source: "faithfulness of Aut(X) on l-adic cohomology",
    },
    Axiom {
        id: "involution-fixed-locus",
        hypothesis: "non-symplectic involution h with [h*] = [1, -1.20, 1] or [1, -1.21]",
        conclusions: &[
            "dim H^h = 2: Fix(h) is a genus 9 curve, or a section R plus a genus 10 curve with X/h = F_4",
            "dim H^h = 1: Fix(h) is a genus 10 curve and X/h = P^2",
        ],
        source: "classification of non-symplectic involutions",
    },
    Axiom {
        id: "chern-class-injective",
        hypothesis: "invariant curves in Fix(g^22) with dim H^g = 1",
        conclusions: &["independent invariant curve classes give independent invariant cohomology classes"],
        source: "injectivity of c1: Pic(X) -> H^2_crys(X/W)",
    },
    Axiom {
        id: "fix22-shape",
        hypothesis: "dim H^{g^22} = 2 and Fix(g^22) contains no rational curve",
        conclusions: &["Fix(g^22) = C_{k+4} + 2k points"],
        source: "structure of fixed loci of order-3 non-symplectic automorphisms",
    },
    Axiom {
        id: "plane-order-3",
        hypothesis: "automorphism of order 3 of P^2",
        conclusions: &["Fix is 3 isolated points", "Fix is a line and a point"],
        source: "linear algebra of PGL(3)",
    },
    Axiom {
        id: "invariant-fibration",
        hypothesis: "X/g^33 = F_4",
        conclusions: &[
            "g preserves the elliptic fibration pulled back from the ruling",
            "g^33 acts trivially on the base, so fibre orbits have length dividing 33",
            "singular fibres have type I1, I2, II or III",
        ],
        source: "pull-back of the ruling of F_4 and the fibre types of the involution quotient",
    },
    Axiom {
        id: "fibrewise-automorphism",
        hypothesis: "a power of g preserves every fibre and fixes the section",
        conclusions: &["it induces on a general fibre an automorphism fixing a point"],
        source: "restriction to the generic fibre",
    },
    Axiom {
        id: "cm-order-6",
        hypothesis: "g^11 has order 6, acts trivially on the base and fixes the section",
        conclusions: &["g^11 acts on a general fibre as complex multiplication of order 6"],
        source: "automorphisms of elliptic curves with j = 0",
    },
    Axiom {
        id: "projective",
        hypothesis: "complex K3 surface with a non-symplectic automorphism of finite order",
        conclusions: &["X is projective"],
        source: "non-projective K3 surfaces have only symplectic automorphisms of finite order",
    },
    Axiom {
        id: "max-symplectic-order-11",
        hypothesis: "symplectic automorphism of finite order of a K3 surface in characteristic 11",
        conclusions: &["its order is at most 11"],
        source: "finite symplectic automorphism groups in positive characteristic",
    },
    Axiom {
        id: "mathieu-profile",
        hypothesis: "symplectic automorphism of order 11 in characteristic 11",
        conclusions: &["[g6*] = [1, (z11:10).2, 1]"],
        source: "Mathieu character of finite symplectic groups",
    },
    Axiom {
        id: "tame-powers",
        hypothesis: "p = 11 and d in {11, 22, 33}",
        conclusions: &["g^d is tame, so the Lefschetz formula holds for it"],
        source: "Lefschetz fixed point formula for tame automorphisms",
    },
    Axiom {
        id: "wild-p1",
        hypothesis: "automorphism of order p of P^1 in characteristic p",
        conclusions: &["it is unipotent and fixes exactly one point"],
        source: "Jordan form in PGL(2)",
    },
];

const TAME: &[&str] = &[
    "tame-purely-non-symplectic",
    "invariant-ample-class",
    "primitive-eigenvalue",
    "faithful-representation",
    "involution-fixed-locus",
    "fix22-shape",
    "chern-class-injective",
    "plane-order-3",
    "invariant-fibration",
    "fibrewise-automorphism",
    "cm-order-6",
];

const WILD: &[&str] = &[
    "max-symplectic-order-11",
    "invariant-ample-class",
    "mathieu-profile",
    "faithful-representation",
    "primitive-eigenvalue",
    "tame-powers",
    "involution-fixed-locus",
    "fix22-shape",
    "chern-class-injective",
    "plane-order-3",
    "invariant-fibration",
    "fibrewise-automorphism",
    "wild-p1",
    "cm-order-6",
];

impl FactTable {
    pub fn standard() -> Self {
        FactTable {
            axioms: AXIOMS.to_vec(),
        }
    }

    pub fn get(&self, id: &str) -> Option<&Axiom> {
        self.axioms.iter().find(|a| a.id == id)
    }

    /// The axioms a case is allowed to cite, in order of use.
    pub fn declared(case: CaseTag) -> Vec<&'static str> {
        match case {
            CaseTag::Tame => TAME.to_vec(),
            CaseTag::Complex => std::iter::once("projective").chain(TAME.iter().copied()).collect(),
            CaseTag::Wild => WILD.to_vec(),
        }
    }
}
