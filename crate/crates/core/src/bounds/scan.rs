use std::path::Path;

use rayon::prelude::*;

use super::enumerate::{enumerate_transitive_small, MAX_ENUMERATION_DEGREE};
use super::file::{parse_group_file, GroupFile};
use super::theorem::Theorem;
use super::verify::{verify_linear, verify_perm, BoundReport, Verdict};
use crate::complen::EngineOptions;
use crate::error::{Error, Result};

/// One input of a scan: a name and either a group or why it has none.
pub struct CorpusEntry {
    pub id: String,
    pub group: std::result::Result<GroupFile, String>,
}

pub enum ScanRow {
    Report(Box<BoundReport>),
    Failed { id: String, error: String },
}

#[derive(Clone, Debug, Default)]
pub struct ScanSummary {
    pub groups: usize,
    pub failures: usize,
    pub violations: usize,
    pub hypothesis_unmet: usize,
    /// Ids of the groups attaining the bound.
    pub equalities: Vec<String>,
    pub max_slack: Option<f64>,
}

pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub summary: ScanSummary,
}

/// Every transitive group of degree 2 to 6, named `n<degree>_<index>`.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 2..=MAX_ENUMERATION_DEGREE {
        for (i, g) in enumerate_transitive_small(n)
            .expect("degree in range")
            .into_iter()
            .enumerate()
        {
            out.push(CorpusEntry {
                id: format!("n{}_{}", n, i + 1),
                group: Ok(GroupFile::Perm(g)),
            });
        }
    }
    out
}

/// Group files in `dir`, sorted by name; unreadable or malformed files
/// become failed entries rather than errors.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    Ok(paths
        .into_iter()
        .map(|p| {
            let id = p
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            let group = std::fs::read_to_string(&p)
                .map_err(Error::from)
                .and_then(|t| parse_group_file(&t))
                .map_err(|e| e.to_string());
            CorpusEntry { id, group }
        })
        .collect())
}

/// Verifies every entry on `jobs` worker threads (all cores when `None`);
/// rows come back in input order.
pub fn scan_corpus(
    entries: &[CorpusEntry],
    theorem: Theorem,
    jobs: Option<usize>,
    opts: &EngineOptions,
) -> Result<ScanReport> {
    let run = || -> Vec<ScanRow> {
        entries
            .par_iter()
            .map(|e| {
                let report = match &e.group {
                    Err(msg) => Err(msg.clone()),
                    Ok(GroupFile::Perm(g)) => verify_perm(&e.id, g, theorem, opts).map_err(|e| e.to_string()),
                    Ok(GroupFile::Linear(h)) => verify_linear(&e.id, h, opts, None).map_err(|e| e.to_string()),
                };
                match report {
                    Ok(r) => ScanRow::Report(Box::new(r)),
                    Err(error) => ScanRow::Failed {
                        id: e.id.clone(),
                        error,
                    },
                }
            })
            .collect()
    };
    let rows = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Unsupported(e.to_string()))?
            .install(run),
        None => run(),
    };
    let mut summary = ScanSummary {
        groups: rows.len(),
        ..ScanSummary::default()
    };
    for row in &rows {
        match row {
            ScanRow::Failed { .. } => summary.failures += 1,
            ScanRow::Report(r) => {
                match r.verdict {
                    Verdict::Violation => summary.violations += 1,
                    Verdict::HypothesisUnmet => summary.hypothesis_unmet += 1,
                    Verdict::Equal => summary.equalities.push(r.id.clone()),
                    Verdict::Strict => {}
                }
                if r.verdict != Verdict::HypothesisUnmet {
                    let s = r.slack();
                    summary.max_slack = Some(summary.max_slack.map_or(s, |m: f64| m.max(s)));
                }
            }
        }
    }
    Ok(ScanReport { rows, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_corpus() {
        let r = scan_corpus(&[], Theorem::T12, Some(1), &EngineOptions::default()).unwrap();
        assert_eq!(r.summary.groups, 0);
        assert!(r.rows.is_empty() && r.summary.max_slack.is_none());
    }

    #[test]
    fn failures_do_not_stop_the_scan() {
        let entries = vec![
            CorpusEntry {
                id: "bad".into(),
                group: Err("parse error".into()),
            },
            CorpusEntry {
                id: "s3".into(),
                group: Ok(GroupFile::Perm(crate::constructions::symmetric(3).unwrap())),
            },
        ];
        let r = scan_corpus(&entries, Theorem::T12, Some(2), &EngineOptions::default()).unwrap();
        assert_eq!(r.summary.failures, 1);
        assert!(matches!(&r.rows[1], ScanRow::Report(rep) if rep.c == 2 && rep.verdict == Verdict::Strict));
    }
}
