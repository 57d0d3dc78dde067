//! File exchange formats for sampled curves, grid construction, and the
//! deviation measures used by every cross-oracle comparison.
//!
//! CSV carries columns `s,x1,x2,x3` with optional frame columns
//! `t1..t3,n1..n3,b1..b3`; JSON carries `{epsilon, s, psi, frames?}`.
//! Numbers are written with 17 significant digits in CSV so re-parsed doubles
//! are bit-identical, and repeated runs produce byte-identical files.

use crate::frenet::{CurveSamples, FrenetFrame};
use crate::minkowski::{metric, LorentzVector, NormalSign};
use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExchangeError {
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("samples are empty or the s column is not strictly increasing")]
    BadSamples,
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("grid spec invalid: {0}")]
    BadGrid(String),
}

/// Uniform arclength grid `min..=max` in steps of `step`, endpoints included
/// within half a step so row counts are unambiguous.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleGrid {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl SampleGrid {
    pub fn new(min: f64, max: f64, step: f64) -> Result<Self, ExchangeError> {
        if !(min.is_finite() && max.is_finite() && step.is_finite()) {
            return Err(ExchangeError::BadGrid("grid bounds must be finite".into()));
        }
        if !(step > 0.0) {
            return Err(ExchangeError::BadGrid(format!("step {step} must be > 0")));
        }
        if !(min < max) {
            return Err(ExchangeError::BadGrid(format!(
                "min {min} must be below max {max}"
            )));
        }
        Ok(Self { min, max, step })
    }

    pub fn len(&self) -> usize {
        ((self.max - self.min) / self.step + 0.5).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.len())
            .map(|i| self.min + self.step * i as f64)
            .collect()
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

/// Write samples as CSV. Frame columns are appended when frames are present.
pub fn write_csv<W: Write>(samples: &CurveSamples, mut out: W) -> Result<(), ExchangeError> {
    let with_frames = samples.frames.is_some();
    if with_frames {
        writeln!(out, "s,x1,x2,x3,t1,t2,t3,n1,n2,n3,b1,b2,b3")?;
    } else {
        writeln!(out, "s,x1,x2,x3")?;
    }
    for i in 0..samples.len() {
        let p = samples.positions[i];
        let mut row = format!(
            "{},{},{},{}",
            fmt(samples.s[i]),
            fmt(p.x1),
            fmt(p.x2),
            fmt(p.x3)
        );
        if let Some(frames) = &samples.frames {
            let f = &frames[i];
            for v in [f.tangent, f.normal, f.binormal] {
                row.push_str(&format!(",{},{},{}", fmt(v.x1), fmt(v.x2), fmt(v.x3)));
            }
        }
        writeln!(out, "{row}")?;
    }
    Ok(())
}

/// Read samples from CSV (header optional). ε is not stored in CSV, so it is
/// inferred from a mid-grid second difference where possible and defaults to
/// a spacelike normal on degenerate data.
pub fn read_csv<R: BufRead>(reader: R) -> Result<CurveSamples, ExchangeError> {
    let mut s = Vec::new();
    let mut positions = Vec::new();
    let mut frame_rows: Vec<[LorentzVector; 3]> = Vec::new();
    let mut saw_frames = false;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        let values: Option<Vec<f64>> = fields.iter().map(|f| f.parse::<f64>().ok()).collect();
        let values = match values {
            Some(v) => v,
            None if idx == 0 => continue, // header
            None => {
                return Err(ExchangeError::Malformed {
                    line: idx + 1,
                    reason: "non-numeric field".into(),
                })
            }
        };
        match values.len() {
            4 => {
                if saw_frames {
                    return Err(ExchangeError::Malformed {
                        line: idx + 1,
                        reason: "row dropped frame columns".into(),
                    });
                }
            }
            13 => {
                if !saw_frames && !s.is_empty() {
                    return Err(ExchangeError::Malformed {
                        line: idx + 1,
                        reason: "frame columns appeared mid-file".into(),
                    });
                }
                saw_frames = true;
            }
            n => {
                return Err(ExchangeError::Malformed {
                    line: idx + 1,
                    reason: format!("expected 4 or 13 columns, found {n}"),
                })
            }
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(ExchangeError::Malformed {
                line: idx + 1,
                reason: "non-finite value".into(),
            });
        }
        s.push(values[0]);
        positions.push(LorentzVector::new(values[1], values[2], values[3]));
        if saw_frames {
            frame_rows.push([
                LorentzVector::new(values[4], values[5], values[6]),
                LorentzVector::new(values[7], values[8], values[9]),
                LorentzVector::new(values[10], values[11], values[12]),
            ]);
        }
    }
    if s.is_empty() || s.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(ExchangeError::BadSamples);
    }
    let epsilon = infer_epsilon(&s, &positions);
    let frames = saw_frames.then(|| {
        frame_rows
            .into_iter()
            .map(|[tangent, normal, binormal]| FrenetFrame {
                tangent,
                normal,
                binormal,
                epsilon,
            })
            .collect()
    });
    Ok(CurveSamples {
        s,
        positions,
        frames,
        epsilon,
    })
}

fn infer_epsilon(s: &[f64], positions: &[LorentzVector]) -> NormalSign {
    if s.len() >= 3 {
        let i = s.len() / 2;
        let h0 = s[i] - s[i - 1];
        let h1 = s[i + 1] - s[i];
        if (h1 - h0).abs() <= 1e-9 * h0.abs().max(1.0) {
            let second = (positions[i + 1] - positions[i].scale(2.0) + positions[i - 1])
                .scale(1.0 / (h0 * h0));
            if let Some(sign) = NormalSign::from_value(metric(&second, &second)) {
                return sign;
            }
        }
    }
    NormalSign::Spacelike
}

#[derive(Serialize, Deserialize)]
struct FramesJson {
    t: Vec<[f64; 3]>,
    n: Vec<[f64; 3]>,
    b: Vec<[f64; 3]>,
}

#[derive(Serialize, Deserialize)]
struct SamplesJson {
    epsilon: i8,
    s: Vec<f64>,
    psi: Vec<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    frames: Option<FramesJson>,
}

pub fn to_json_string(samples: &CurveSamples) -> Result<String, ExchangeError> {
    let doc = SamplesJson {
        epsilon: samples.epsilon.value() as i8,
        s: samples.s.clone(),
        psi: samples.positions.iter().map(|p| p.components()).collect(),
        frames: samples.frames.as_ref().map(|frames| FramesJson {
            t: frames.iter().map(|f| f.tangent.components()).collect(),
            n: frames.iter().map(|f| f.normal.components()).collect(),
            b: frames.iter().map(|f| f.binormal.components()).collect(),
        }),
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

pub fn from_json_str(text: &str) -> Result<CurveSamples, ExchangeError> {
    let doc: SamplesJson = serde_json::from_str(text)?;
    if doc.s.is_empty() || doc.s.len() != doc.psi.len() || doc.s.windows(2).any(|w| !(w[1] > w[0]))
    {
        return Err(ExchangeError::BadSamples);
    }
    let epsilon = if doc.epsilon >= 0 {
        NormalSign::Spacelike
    } else {
        NormalSign::Timelike
    };
    let frames = match doc.frames {
        Some(f) => {
            if f.t.len() != doc.s.len() || f.n.len() != doc.s.len() || f.b.len() != doc.s.len() {
                return Err(ExchangeError::BadSamples);
            }
            Some(
                f.t.iter()
                    .zip(&f.n)
                    .zip(&f.b)
                    .map(|((t, n), b)| FrenetFrame {
                        tangent: (*t).into(),
                        normal: (*n).into(),
                        binormal: (*b).into(),
                        epsilon,
                    })
                    .collect(),
            )
        }
        None => None,
    };
    Ok(CurveSamples {
        s: doc.s,
        positions: doc.psi.into_iter().map(Into::into).collect(),
        frames,
        epsilon,
    })
}

/// Max absolute component deviation between two equally-sampled position
/// sequences, without any alignment.
pub fn max_deviation(a: &[LorentzVector], b: &[LorentzVector]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(p, q)| (*p - *q).max_abs())
        .fold(0.0, f64::max)
}

/// Max deviation modulo translation: the mean difference (the L2-optimal
/// translation) is removed before taking the max.
pub fn max_deviation_modulo_translation(a: &[LorentzVector], b: &[LorentzVector]) -> f64 {
    assert_eq!(a.len(), b.len(), "deviation needs matched sample counts");
    if a.is_empty() {
        return 0.0;
    }
    let mut shift = LorentzVector::zero();
    for (p, q) in a.iter().zip(b) {
        shift = shift + (*p - *q);
    }
    shift = shift.scale(1.0 / a.len() as f64);
    a.iter()
        .zip(b)
        .map(|(p, q)| (*p - *q - shift).max_abs())
        .fold(0.0, f64::max)
}
