use serde::{Deserialize, Serialize};

use crate::annprop::{check_module_property, check_ring_property, AnyProperty, Verdict};
use crate::error::Result;
use crate::Caps;

use super::corpus::{Corpus, CorpusEntry};

/// A structure satisfying one property and failing another.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub structure: String,
    /// Verdict for the property that holds.
    pub holds: Verdict,
    /// Verdict (with failure witness) for the property that fails.
    pub fails: Verdict,
}

/// Evaluates a property on a corpus entry. Ring properties apply to regular
/// modules only, through their ring.
fn evaluate(e: &CorpusEntry, p: AnyProperty, caps: &Caps) -> Option<Result<Verdict>> {
    match p {
        AnyProperty::Module(q) => Some(check_module_property(&e.module, q, caps)),
        AnyProperty::Ring(q) => e.is_regular().then(|| check_ring_property(&e.ring, q, caps)),
    }
}

/// First corpus entry (in corpus order) with `a` and not `b`. Entries that hit
/// a size cap are passed over.
pub fn find_separation(a: AnyProperty, b: AnyProperty, corpus: &Corpus, caps: &Caps) -> Option<Separation> {
    corpus.entries.iter().find_map(|e| {
        let va = evaluate(e, a, caps)?.ok()?;
        if !va.holds {
            return None;
        }
        let vb = evaluate(e, b, caps)?.ok()?;
        (!vb.holds).then(|| Separation {
            structure: e.name.clone(),
            holds: va,
            fails: vb,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annprop::{PropertyId, RingPropertyId};
    use crate::harness::corpus::{generate_corpus, CorpusSpec};

    #[test]
    fn named_separations() {
        let caps = Caps::default();
        let c = generate_corpus(&CorpusSpec::default());
        let s = find_separation(
            AnyProperty::Module(PropertyId::EndoAip),
            AnyProperty::Module(PropertyId::CentrallyEndoAip),
            &c,
            &caps,
        )
        .unwrap();
        assert_eq!(s.structure, "T2(Z2)_T2(Z2)");
        let s = find_separation(
            AnyProperty::Ring(RingPropertyId::CentrallyAip),
            AnyProperty::Ring(RingPropertyId::Abelian),
            &c,
            &caps,
        )
        .unwrap();
        assert_eq!(s.structure, "M2(Z2)_M2(Z2)");
        assert!(find_separation(
            AnyProperty::Module(PropertyId::CentrallyEndoAip),
            AnyProperty::Module(PropertyId::Rickart),
            &c,
            &caps,
        )
        .is_none());
    }
}
