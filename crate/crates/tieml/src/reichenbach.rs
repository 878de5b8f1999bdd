//! Pure algebra over Reichenbach time-variable triples.
//!
//! A triple holds three integers in `[-2, 2]`: event time E, reference
//! time R and speech time S. Only the pairwise ordering carries meaning:
//! R versus S selects past/present/future, E versus R selects
//! anterior/simple/posterior, giving nine tense categories. The sign of a
//! value (negative = before speech time, 0 = present, positive = after)
//! is a redundant encoding on top of the ordering.

use std::cmp::Ordering;
use std::fmt;

/// Inclusive lower bound for E, R and S values.
pub const TIME_VALUE_MIN: i8 = -2;
/// Inclusive upper bound for E, R and S values.
pub const TIME_VALUE_MAX: i8 = 2;

/// Which of the three time variables a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TimeVariable {
    Event,
    Reference,
    Speech,
}

impl TimeVariable {
    /// The attribute name used on the XML surface.
    pub fn as_str(self) -> &'static str {
        match self {
            TimeVariable::Event => "E",
            TimeVariable::Reference => "R",
            TimeVariable::Speech => "S",
        }
    }
}

impl fmt::Display for TimeVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A time value outside `[-2, 2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("{variable} value {value} out of range [{TIME_VALUE_MIN}, {TIME_VALUE_MAX}]")]
pub struct RangeError {
    pub variable: TimeVariable,
    pub value: i64,
}

fn check_range(variable: TimeVariable, value: i8) -> Result<i8, RangeError> {
    if (TIME_VALUE_MIN..=TIME_VALUE_MAX).contains(&value) {
        Ok(value)
    } else {
        Err(RangeError {
            variable,
            value: value as i64,
        })
    }
}

/// An (E, R, S) annotation. Construction enforces the value range, so a
/// triple in hand is always classifiable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReichenbachTriple {
    e: i8,
    r: i8,
    s: i8,
}

impl ReichenbachTriple {
    pub fn new(e: i8, r: i8, s: i8) -> Result<Self, RangeError> {
        Ok(Self {
            e: check_range(TimeVariable::Event, e)?,
            r: check_range(TimeVariable::Reference, r)?,
            s: check_range(TimeVariable::Speech, s)?,
        })
    }

    pub fn e(self) -> i8 {
        self.e
    }

    pub fn r(self) -> i8 {
        self.r
    }

    pub fn s(self) -> i8 {
        self.s
    }

    /// Classifies the triple into one of the nine tense categories from
    /// the two pairwise order tests (R vs S, E vs R).
    pub fn category(self) -> TenseCategory {
        let reference = match self.r.cmp(&self.s) {
            Ordering::Less => ReferenceRelation::Past,
            Ordering::Equal => ReferenceRelation::Present,
            Ordering::Greater => ReferenceRelation::Future,
        };
        let event = match self.e.cmp(&self.r) {
            Ordering::Less => EventRelation::Anterior,
            Ordering::Equal => EventRelation::Simple,
            Ordering::Greater => EventRelation::Posterior,
        };
        TenseCategory { reference, event }
    }

    /// Maps the triple to the canonical representative of its category.
    /// Idempotent; the result always has S = 0 and unit steps.
    pub fn normalized(self) -> Self {
        self.category().canonical_triple()
    }
}

impl fmt::Display for ReichenbachTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E={} R={} S={}", self.e, self.r, self.s)
    }
}

/// Position of the reference time relative to speech time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReferenceRelation {
    Past,
    Present,
    Future,
}

impl ReferenceRelation {
    pub fn as_str(self) -> &'static str {
        match self {
            ReferenceRelation::Past => "Past",
            ReferenceRelation::Present => "Present",
            ReferenceRelation::Future => "Future",
        }
    }
}

/// Position of the event time relative to reference time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventRelation {
    Anterior,
    Simple,
    Posterior,
}

impl EventRelation {
    pub fn as_str(self) -> &'static str {
        match self {
            EventRelation::Anterior => "Anterior",
            EventRelation::Simple => "Simple",
            EventRelation::Posterior => "Posterior",
        }
    }
}

/// One of the nine Reichenbach tense categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TenseCategory {
    pub reference: ReferenceRelation,
    pub event: EventRelation,
}

impl TenseCategory {
    pub const ALL: [TenseCategory; 9] = {
        use EventRelation::*;
        use ReferenceRelation::*;
        [
            TenseCategory { reference: Past, event: Anterior },
            TenseCategory { reference: Past, event: Simple },
            TenseCategory { reference: Past, event: Posterior },
            TenseCategory { reference: Present, event: Anterior },
            TenseCategory { reference: Present, event: Simple },
            TenseCategory { reference: Present, event: Posterior },
            TenseCategory { reference: Future, event: Anterior },
            TenseCategory { reference: Future, event: Simple },
            TenseCategory { reference: Future, event: Posterior },
        ]
    };

    pub fn new(reference: ReferenceRelation, event: EventRelation) -> Self {
        Self { reference, event }
    }

    /// The traditional tense label where one exists; categories without a
    /// traditional correspondence use the systematic "Posterior ..." names.
    pub fn traditional_label(self) -> &'static str {
        use EventRelation::*;
        use ReferenceRelation::*;
        match (self.reference, self.event) {
            (Past, Anterior) => "Pluperfect",
            (Past, Simple) => "Simple Past",
            (Past, Posterior) => "Posterior Past",
            (Present, Anterior) => "Present Perfect",
            (Present, Simple) => "Simple Present",
            (Present, Posterior) => "Posterior Present",
            (Future, Anterior) => "Future Perfect",
            (Future, Simple) => "Simple Future",
            (Future, Posterior) => "Posterior Future",
        }
    }

    /// The unique representative triple with S = 0 and adjacent distinct
    /// positions one step apart. Posterior forms continue past R in the
    /// direction R sits relative to S, e.g. Posterior Future is (2, 1, 0).
    pub fn canonical_triple(self) -> ReichenbachTriple {
        let r = match self.reference {
            ReferenceRelation::Past => -1,
            ReferenceRelation::Present => 0,
            ReferenceRelation::Future => 1,
        };
        let e = match self.event {
            EventRelation::Anterior => r - 1,
            EventRelation::Simple => r,
            EventRelation::Posterior => r + 1,
        };
        ReichenbachTriple { e, r, s: 0 }
    }
}

impl fmt::Display for TenseCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.traditional_label())
    }
}
