//! Text and JSON renderings of rigged configurations.

use rigged_core::{RcSpace, RiggedConfiguration, Weight};
use serde::Serialize;

#[derive(Clone, Copy, Debug, Default)]
pub struct Style {
    pub vacancies: bool,
    pub compact: bool,
}

/// Young-diagram rendering, rigged partitions side by side: each row is a string drawn as
/// `[]` boxes with its label to the right, and its vacancy number to the left when
/// requested. An empty rigged partition is drawn as `()`.
pub fn diagram(space: &RcSpace, rc: &RiggedConfiguration, vacancies: bool) -> String {
    let blocks: Vec<Vec<String>> = space
        .algebra()
        .nodes()
        .map(|a| {
            let strings = rc.strings(a);
            if strings.is_empty() {
                return vec!["()".to_string()];
            }
            let vac: Vec<String> =
                strings.iter().map(|s| space.vacancy(rc, a, s.length).to_string()).collect();
            let vw = vac.iter().map(String::len).max().unwrap_or(0);
            let bw = 2 * strings[0].length;
            strings
                .iter()
                .zip(&vac)
                .map(|(s, p)| {
                    let boxes = "[]".repeat(s.length);
                    if vacancies {
                        format!("{p:>vw$} {boxes:<bw$} {}", s.label)
                    } else {
                        format!("{boxes:<bw$} {}", s.label)
                    }
                })
                .collect()
        })
        .collect();
    let widths: Vec<usize> =
        blocks.iter().map(|b| b.iter().map(|l| l.chars().count()).max().unwrap_or(0)).collect();
    let height = blocks.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in 0..height {
        let mut line = String::new();
        for (k, block) in blocks.iter().enumerate() {
            if k > 0 {
                line.push_str("   ");
            }
            let cell = block.get(row).map_or("", String::as_str);
            line.push_str(&format!("{cell:<w$}", w = widths[k]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// One-line form, `(length,label)` strings separated by ` | ` between nodes; with
/// vacancies each string reads `p:(length,label)`.
pub fn compact(space: &RcSpace, rc: &RiggedConfiguration, vacancies: bool) -> String {
    if !vacancies {
        return rc.to_string();
    }
    space
        .algebra()
        .nodes()
        .map(|a| {
            let strings = rc.strings(a);
            if strings.is_empty() {
                return "()".to_string();
            }
            strings
                .iter()
                .map(|s| format!("{}:({},{})", space.vacancy(rc, a, s.length), s.length, s.label))
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

pub fn text(space: &RcSpace, rc: &RiggedConfiguration, style: Style) -> String {
    if style.compact {
        let mut s = compact(space, rc, style.vacancies);
        s.push('\n');
        s
    } else {
        diagram(space, rc, style.vacancies)
    }
}

/// JSON form of a rigged configuration with its weight and cocharge.
#[derive(Clone, Debug, Serialize)]
pub struct RcJson {
    pub strings: RiggedConfiguration,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vacancies: Option<Vec<Vec<i64>>>,
    pub weight: Weight,
    pub cocharge: i64,
}

impl RcJson {
    pub fn new(space: &RcSpace, rc: &RiggedConfiguration, style: Style) -> Self {
        let vacancies = style.vacancies.then(|| {
            space
                .algebra()
                .nodes()
                .map(|a| rc.strings(a).iter().map(|s| space.vacancy(rc, a, s.length)).collect())
                .collect()
        });
        RcJson { strings: rc.clone(), vacancies, weight: space.weight(rc), cocharge: space.cocharge(rc) }
    }
}
