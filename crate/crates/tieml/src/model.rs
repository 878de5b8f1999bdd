//! Typed in-memory representation of a TIE-ML corpus.
//!
//! A corpus is a list of documents, a document an ordered list of
//! sentences, a sentence an ordered list of clauses. Clause order is the
//! presentation order of the source text. All annotation attributes are
//! optional at the clause level; range constraints (positive event ids
//! and time slots, E/R/S within `[-2, 2]`) are enforced at construction
//! rather than left to validation.
//!
//! Every type is immutable after construction and safe to share across
//! threads.

use std::fmt;
use std::num::NonZeroU32;

use crate::reichenbach::{RangeError, ReichenbachTriple, ReferenceRelation, TimeVariable};

/// Construction-time violation of a model invariant.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("event id must be a positive integer, got {0}")]
    InvalidEventId(u64),
    #[error("time slot must be a positive integer, got {0}")]
    InvalidTimeSlot(u64),
    #[error("sentence must contain at least one clause")]
    EmptySentence,
    #[error(transparent)]
    TimeValue(#[from] RangeError),
}

/// Numeric event identifier, at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EventId(NonZeroU32);

impl EventId {
    pub fn new(value: u32) -> Result<Self, ModelError> {
        NonZeroU32::new(value)
            .map(Self)
            .ok_or(ModelError::InvalidEventId(value as u64))
    }

    pub fn get(self) -> u32 {
        self.0.get()
    }
}

impl fmt::Display for EventId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Ordinal time slot index, at least 1. Equal slots mean temporal
/// overlap; gaps carry no duration meaning.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TimeSlot(NonZeroU32);

impl TimeSlot {
    pub fn new(value: u32) -> Result<Self, ModelError> {
        NonZeroU32::new(value)
            .map(Self)
            .ok_or(ModelError::InvalidTimeSlot(value as u64))
    }

    pub fn get(self) -> u32 {
        self.0.get()
    }
}

impl fmt::Display for TimeSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Tense label of a clause. `PAST`, `PRES` and `FUT` form the closed set
/// and are recognized case-insensitively; anything else is a
/// language-specific code preserved byte-exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TenseLabel {
    Past,
    Present,
    Future,
    Other(String),
}

impl TenseLabel {
    pub fn parse(value: &str) -> Self {
        if value.eq_ignore_ascii_case("PAST") {
            TenseLabel::Past
        } else if value.eq_ignore_ascii_case("PRES") {
            TenseLabel::Present
        } else if value.eq_ignore_ascii_case("FUT") {
            TenseLabel::Future
        } else {
            TenseLabel::Other(value.to_owned())
        }
    }

    /// Canonical spelling for closed-set labels, the verbatim code
    /// otherwise.
    pub fn as_str(&self) -> &str {
        match self {
            TenseLabel::Past => "PAST",
            TenseLabel::Present => "PRES",
            TenseLabel::Future => "FUT",
            TenseLabel::Other(code) => code,
        }
    }

    /// The reference relation a closed-set label commits to; opaque codes
    /// commit to nothing.
    pub fn reference_relation(&self) -> Option<ReferenceRelation> {
        match self {
            TenseLabel::Past => Some(ReferenceRelation::Past),
            TenseLabel::Present => Some(ReferenceRelation::Present),
            TenseLabel::Future => Some(ReferenceRelation::Future),
            TenseLabel::Other(_) => None,
        }
    }

    pub fn is_closed_set(&self) -> bool {
        !matches!(self, TenseLabel::Other(_))
    }
}

impl fmt::Display for TenseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A clause: one predicate-level annotation unit.
///
/// The E/R/S values are stored individually because the surface format
/// allows any subset of them to be present; [`Clause::triple`] yields a
/// classifiable [`ReichenbachTriple`] only when all three are annotated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    event_id: Option<EventId>,
    time_slot: Option<TimeSlot>,
    tense: Option<TenseLabel>,
    perfect: Option<bool>,
    progressive: Option<bool>,
    e: Option<i8>,
    r: Option<i8>,
    s: Option<i8>,
    reference: Option<String>,
    text: String,
}

impl Clause {
    /// Starts a builder over the given surface text.
    pub fn builder(text: impl Into<String>) -> ClauseBuilder {
        ClauseBuilder::new(text)
    }

    pub fn event_id(&self) -> Option<EventId> {
        self.event_id
    }

    pub fn time_slot(&self) -> Option<TimeSlot> {
        self.time_slot
    }

    pub fn tense(&self) -> Option<&TenseLabel> {
        self.tense.as_ref()
    }

    pub fn perfect(&self) -> Option<bool> {
        self.perfect
    }

    pub fn progressive(&self) -> Option<bool> {
        self.progressive
    }

    pub fn e(&self) -> Option<i8> {
        self.e
    }

    pub fn r(&self) -> Option<i8> {
        self.r
    }

    pub fn s(&self) -> Option<i8> {
        self.s
    }

    pub fn reference(&self) -> Option<&str> {
        self.reference.as_deref()
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    /// Aspect flags with absent attributes defaulting to false.
    pub fn effective_flags(&self) -> (bool, bool) {
        (
            self.perfect.unwrap_or(false),
            self.progressive.unwrap_or(false),
        )
    }

    /// The complete (E, R, S) triple, when all three values are annotated.
    pub fn triple(&self) -> Option<ReichenbachTriple> {
        match (self.e, self.r, self.s) {
            (Some(e), Some(r), Some(s)) => {
                // Range was checked when the clause was built.
                Some(ReichenbachTriple::new(e, r, s).expect("clause holds in-range values"))
            }
            _ => None,
        }
    }

    /// True when one or two of E/R/S are annotated but not all three.
    pub fn has_partial_triple(&self) -> bool {
        let present = [self.e, self.r, self.s].iter().filter(|v| v.is_some()).count();
        present == 1 || present == 2
    }
}

/// Builder collecting raw attribute values; `build` enforces every range
/// invariant.
#[derive(Debug, Clone, Default)]
pub struct ClauseBuilder {
    event_id: Option<u32>,
    time_slot: Option<u32>,
    tense: Option<TenseLabel>,
    perfect: Option<bool>,
    progressive: Option<bool>,
    e: Option<i8>,
    r: Option<i8>,
    s: Option<i8>,
    reference: Option<String>,
    text: String,
}

impl ClauseBuilder {
    pub fn new(text: impl Into<String>) -> Self {
        Self {
            text: text.into(),
            ..Self::default()
        }
    }

    pub fn event_id(mut self, id: u32) -> Self {
        self.event_id = Some(id);
        self
    }

    pub fn time_slot(mut self, slot: u32) -> Self {
        self.time_slot = Some(slot);
        self
    }

    pub fn tense(mut self, tense: TenseLabel) -> Self {
        self.tense = Some(tense);
        self
    }

    pub fn perfect(mut self, value: bool) -> Self {
        self.perfect = Some(value);
        self
    }

    pub fn progressive(mut self, value: bool) -> Self {
        self.progressive = Some(value);
        self
    }

    pub fn e(mut self, value: i8) -> Self {
        self.e = Some(value);
        self
    }

    pub fn r(mut self, value: i8) -> Self {
        self.r = Some(value);
        self
    }

    pub fn s(mut self, value: i8) -> Self {
        self.s = Some(value);
        self
    }

    /// Sets all three time values at once.
    pub fn triple(self, triple: ReichenbachTriple) -> Self {
        self.e(triple.e()).r(triple.r()).s(triple.s())
    }

    pub fn reference(mut self, reference: impl Into<String>) -> Self {
        self.reference = Some(reference.into());
        self
    }

    pub fn build(self) -> Result<Clause, ModelError> {
        use crate::reichenbach::{TIME_VALUE_MAX, TIME_VALUE_MIN};
        let check = |variable: TimeVariable, value: Option<i8>| -> Result<Option<i8>, RangeError> {
            match value {
                Some(v) if !(TIME_VALUE_MIN..=TIME_VALUE_MAX).contains(&v) => Err(RangeError {
                    variable,
                    value: v as i64,
                }),
                other => Ok(other),
            }
        };
        Ok(Clause {
            event_id: self.event_id.map(EventId::new).transpose()?,
            time_slot: self.time_slot.map(TimeSlot::new).transpose()?,
            tense: self.tense,
            perfect: self.perfect,
            progressive: self.progressive,
            e: check(TimeVariable::Event, self.e)?,
            r: check(TimeVariable::Reference, self.r)?,
            s: check(TimeVariable::Speech, self.s)?,
            reference: self.reference,
            text: self.text,
        })
    }
}

/// A sentence: a non-empty run of clauses in textual order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    clauses: Vec<Clause>,
}

impl Sentence {
    pub fn new(clauses: Vec<Clause>) -> Result<Self, ModelError> {
        if clauses.is_empty() {
            return Err(ModelError::EmptySentence);
        }
        Ok(Self { clauses })
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }
}

/// A document: sentences in textual order under an opaque id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub sentences: Vec<Sentence>,
}

impl Document {
    pub fn new(id: impl Into<String>, sentences: Vec<Sentence>) -> Self {
        Self {
            id: id.into(),
            sentences,
        }
    }

    /// Clauses in presentation order, with their sentence and clause
    /// indices.
    pub fn clauses(&self) -> impl Iterator<Item = (usize, usize, &Clause)> {
        self.sentences.iter().enumerate().flat_map(|(si, sentence)| {
            sentence
                .clauses()
                .iter()
                .enumerate()
                .map(move |(ci, clause)| (si, ci, clause))
        })
    }
}

/// A corpus: documents in input order. May be empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Corpus {
    pub documents: Vec<Document>,
}

impl Corpus {
    pub fn new(documents: Vec<Document>) -> Self {
        Self { documents }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_ids_at_construction() {
        assert_eq!(
            Clause::builder("x").event_id(0).build(),
            Err(ModelError::InvalidEventId(0))
        );
        assert_eq!(
            Clause::builder("x").time_slot(0).build(),
            Err(ModelError::InvalidTimeSlot(0))
        );
        assert!(Clause::builder("x").e(3).build().is_err());
        assert!(Clause::builder("x").s(-3).build().is_err());
        assert_eq!(Sentence::new(vec![]), Err(ModelError::EmptySentence));
    }

    #[test]
    fn effective_flags_default_to_false() {
        let both = Clause::builder("had been experiencing")
            .perfect(true)
            .progressive(true)
            .build()
            .unwrap();
        assert_eq!(both.effective_flags(), (true, true));

        let none = Clause::builder("watched").build().unwrap();
        assert_eq!(none.effective_flags(), (false, false));

        let perfect_only = Clause::builder("had watched").perfect(true).build().unwrap();
        assert_eq!(perfect_only.effective_flags(), (true, false));
    }

    #[test]
    fn triple_requires_all_three_values() {
        let complete = Clause::builder("x").e(-1).r(-1).s(0).build().unwrap();
        let t = complete.triple().unwrap();
        assert_eq!((t.e(), t.r(), t.s()), (-1, -1, 0));
        assert!(!complete.has_partial_triple());

        let partial = Clause::builder("x").e(1).build().unwrap();
        assert_eq!(partial.triple(), None);
        assert!(partial.has_partial_triple());

        let empty = Clause::builder("x").build().unwrap();
        assert_eq!(empty.triple(), None);
        assert!(!empty.has_partial_triple());
    }

    #[test]
    fn tense_labels_normalize_closed_set_case() {
        assert_eq!(TenseLabel::parse("past"), TenseLabel::Past);
        assert_eq!(TenseLabel::parse("Past"), TenseLabel::Past);
        assert_eq!(TenseLabel::parse("FUT"), TenseLabel::Future);
        assert_eq!(TenseLabel::parse("pres").as_str(), "PRES");
        // Opaque codes stay byte-exact and case-sensitive.
        assert_eq!(TenseLabel::parse("sp"), TenseLabel::Other("sp".into()));
        assert_ne!(TenseLabel::parse("sp"), TenseLabel::parse("SP_X"));
        assert_eq!(TenseLabel::parse("sp").as_str(), "sp");
    }

    #[test]
    fn presentation_order_flattens_textual_order() {
        let s1 = Sentence::new(vec![
            Clause::builder("a").event_id(1).build().unwrap(),
            Clause::builder("b").event_id(2).build().unwrap(),
        ])
        .unwrap();
        let s2 = Sentence::new(vec![Clause::builder("c").event_id(3).build().unwrap()]).unwrap();
        let doc = Document::new("d", vec![s1, s2]);
        let texts: Vec<&str> = doc.clauses().map(|(_, _, c)| c.text()).collect();
        assert_eq!(texts, ["a", "b", "c"]);
        let indices: Vec<(usize, usize)> = doc.clauses().map(|(s, c, _)| (s, c)).collect();
        assert_eq!(indices, [(0, 0), (0, 1), (1, 0)]);
    }
}
