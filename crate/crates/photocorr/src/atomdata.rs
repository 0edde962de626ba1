//! Atomic dataset schema, parser/serializer, and the bundled records.
//!
//! File format (line oriented, UTF-8): `#` starts a comment; a record
//! begins `atom <symbol> Z=<number>` and is followed by indented lines
//! `shell n=<int> l=<int> occ=<int> [E=<eV>]`,
//! `normsq n=<int> value=<au>`, `normratio n=<int> value=<real>`,
//! `defect h=<real> inf=<real>`, `enp n=<int> E=<eV>`, and
//! `prov <field>=<paper-table|derived|user>`. Energies are stored in eV in
//! files (1 hartree = 27.211386 eV) and converted on access.

use crate::error::{Error, Result};
use crate::quantum_defect::{defect_from_binding, x_ph, CorrelationBreakdown, DefectModel};
use crate::HARTREE_IN_EV;
use std::collections::BTreeMap;

/// One occupied shell; the binding energy, when present, is in eV (< 0).
#[derive(Debug, Clone, PartialEq)]
pub struct Shell {
    pub n: u32,
    pub ell: u32,
    pub occupancy: u32,
    pub binding_energy_ev: Option<f64>,
}

/// Everything the pipeline needs to know about one atom.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomRecord {
    pub symbol: String,
    pub z: f64,
    pub shells: Vec<Shell>,
    /// Squared origin values N² of bound s states (bohr⁻³), keyed by n.
    pub norm_sq_s: BTreeMap<u32, f64>,
    /// N^r_{ns}/N^r_{np} ratios, keyed by n.
    pub norm_ratio: BTreeMap<u32, f64>,
    /// Defect of the highest occupied s state.
    pub delta_h: f64,
    /// Asymptotic defect of the unoccupied series.
    pub delta_inf: f64,
    /// Binding energies of ionizable np states, in eV (< 0), keyed by n.
    pub e_np_ev: BTreeMap<u32, f64>,
    /// Per-field provenance tags: paper-table | derived | user.
    pub provenance: BTreeMap<String, String>,
}

impl AtomRecord {
    /// Principal quantum number of the highest occupied s state.
    pub fn n_h(&self) -> Option<u32> {
        self.shells
            .iter()
            .filter(|s| s.ell == 0 && s.occupancy > 0)
            .map(|s| s.n)
            .max()
    }

    pub fn shell(&self, n: u32, ell: u32) -> Option<&Shell> {
        self.shells.iter().find(|s| s.n == n && s.ell == ell)
    }

    pub fn shell_binding_hartree(&self, n: u32, ell: u32) -> Option<f64> {
        self.shell(n, ell)
            .and_then(|s| s.binding_energy_ev)
            .map(|e| e / HARTREE_IN_EV)
    }

    pub fn e_np_hartree(&self, n: u32) -> Option<f64> {
        self.e_np_ev.get(&n).map(|e| e / HARTREE_IN_EV)
    }

    /// Principal quantum numbers of ionizable np states recorded for this
    /// atom, in ascending order.
    pub fn p_state_ns(&self) -> Vec<u32> {
        self.e_np_ev.keys().copied().collect()
    }

    pub fn defect_model(&self) -> Result<DefectModel> {
        let n_h = self
            .n_h()
            .ok_or_else(|| Error::domain(format!("{}: no occupied s shell", self.symbol)))?;
        DefectModel::new(self.delta_h, self.delta_inf, n_h, self.z)
    }

    /// Defect of the ns shell at the ionized state's n, from its binding
    /// energy (the choice entering the (n − Δ_n)³ prefactor).
    pub fn delta_n(&self, n: u32) -> Result<f64> {
        let e = self.shell_binding_hartree(n, 0).ok_or_else(|| {
            Error::domain(format!("{}: no binding energy for the {n}s shell", self.symbol))
        })?;
        defect_from_binding(e, n)
    }

    /// Full (x_d, x_c, x_ph) breakdown for ionization of the np state.
    pub fn breakdown(&self, n: u32) -> Result<CorrelationBreakdown> {
        let model = self.defect_model()?;
        let delta_n = self.delta_n(n)?;
        let n2 = *self.norm_sq_s.get(&n).ok_or_else(|| {
            Error::domain(format!("{}: no normalization for the {n}s shell", self.symbol))
        })?;
        let e_np = self.e_np_hartree(n).ok_or_else(|| {
            Error::domain(format!("{}: no {n}p binding energy", self.symbol))
        })?;
        x_ph(&model, n, delta_n, n2, e_np)
    }

    fn validate(&self, line: usize) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for s in &self.shells {
            if !seen.insert((s.n, s.ell)) {
                return Err(Error::Parse {
                    line,
                    message: format!("{}: duplicate shell n={}, l={}", self.symbol, s.n, s.ell),
                });
            }
        }
        if let Some(n_h) = self.n_h() {
            if n_h as f64 + 1.0 - self.delta_inf <= 0.0 {
                return Err(Error::Parse {
                    line,
                    message: format!(
                        "{}: asymptotic defect {} reaches the first unoccupied level",
                        self.symbol, self.delta_inf
                    ),
                });
            }
        }
        for (&n, &e) in &self.e_np_ev {
            if e >= 0.0 {
                return Err(Error::Parse {
                    line,
                    message: format!("{}: {n}p binding energy {e} must be negative", self.symbol),
                });
            }
        }
        Ok(())
    }
}

fn parse_kv<'a>(token: &'a str, line: usize) -> Result<(&'a str, &'a str)> {
    token.split_once('=').ok_or(Error::Parse {
        line,
        message: format!("expected key=value, got '{token}'"),
    })
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str, line: usize) -> Result<T> {
    s.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what}: '{s}'"),
    })
}

/// Parse a dataset. Returns all records, or every positioned error found;
/// never panics on malformed input.
pub fn parse_atom_file(text: &str) -> std::result::Result<Vec<AtomRecord>, Vec<Error>> {
    let mut records: Vec<AtomRecord> = Vec::new();
    let mut errors: Vec<Error> = Vec::new();
    let mut current: Option<(AtomRecord, usize, bool)> = None; // record, start line, defect seen

    let finish = |cur: Option<(AtomRecord, usize, bool)>,
                      records: &mut Vec<AtomRecord>,
                      errors: &mut Vec<Error>| {
        if let Some((rec, start, has_defect)) = cur {
            if !has_defect {
                errors.push(Error::Parse {
                    line: start,
                    message: format!("{}: missing defect line", rec.symbol),
                });
                return;
            }
            match rec.validate(start) {
                Ok(()) => records.push(rec),
                Err(e) => errors.push(e),
            }
        }
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = line.split_whitespace();
        let Some(head) = tokens.next() else { continue };
        match head {
            "atom" => {
                finish(current.take(), &mut records, &mut errors);
                let symbol = match tokens.next() {
                    Some(s) => s.to_string(),
                    None => {
                        errors.push(Error::Parse {
                            line: line_no,
                            message: "atom line missing symbol".into(),
                        });
                        continue;
                    }
                };
                let mut z = None;
                for t in tokens {
                    match parse_kv(t, line_no) {
                        Ok(("Z", v)) => match parse_num::<f64>(v, "Z", line_no) {
                            Ok(v) => z = Some(v),
                            Err(e) => errors.push(e),
                        },
                        Ok((k, _)) => errors.push(Error::Parse {
                            line: line_no,
                            message: format!("unknown key '{k}' on atom line"),
                        }),
                        Err(e) => errors.push(e),
                    }
                }
                let Some(z) = z else {
                    errors.push(Error::Parse {
                        line: line_no,
                        message: format!("atom {symbol}: missing Z"),
                    });
                    continue;
                };
                current = Some((
                    AtomRecord {
                        symbol,
                        z,
                        shells: Vec::new(),
                        norm_sq_s: BTreeMap::new(),
                        norm_ratio: BTreeMap::new(),
                        delta_h: 0.0,
                        delta_inf: 0.0,
                        e_np_ev: BTreeMap::new(),
                        provenance: BTreeMap::new(),
                    },
                    line_no,
                    false,
                ));
            }
            "shell" | "normsq" | "normratio" | "defect" | "enp" | "prov" => {
                let Some((rec, _, has_defect)) = current.as_mut() else {
                    errors.push(Error::Parse {
                        line: line_no,
                        message: format!("'{head}' line before any atom record"),
                    });
                    continue;
                };
                let mut fields: Vec<(&str, &str)> = Vec::new();
                let mut line_ok = true;
                for t in tokens {
                    match parse_kv(t, line_no) {
                        Ok(kv) => fields.push(kv),
                        Err(e) => {
                            errors.push(e);
                            line_ok = false;
                        }
                    }
                }
                if !line_ok {
                    continue;
                }
                let get = |key: &str| fields.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
                let result: Result<()> = (|| {
                    for (k, _) in &fields {
                        let known: &[&str] = match head {
                            "shell" => &["n", "l", "occ", "E"],
                            "normsq" | "normratio" => &["n", "value"],
                            "defect" => &["h", "inf"],
                            "enp" => &["n", "E"],
                            "prov" => {
                                continue; // field name is free-form
                            }
                            _ => unreachable!(),
                        };
                        if !known.contains(k) {
                            return Err(Error::Parse {
                                line: line_no,
                                message: format!("unknown key '{k}' on {head} line"),
                            });
                        }
                    }
                    let need = |key: &str| -> Result<&str> {
                        get(key).ok_or(Error::Parse {
                            line: line_no,
                            message: format!("{head} line missing {key}="),
                        })
                    };
                    match head {
                        "shell" => {
                            let n = parse_num::<u32>(need("n")?, "n", line_no)?;
                            let ell = parse_num::<u32>(need("l")?, "l", line_no)?;
                            let occ = parse_num::<u32>(need("occ")?, "occ", line_no)?;
                            let e = match get("E") {
                                Some(v) => Some(parse_num::<f64>(v, "E", line_no)?),
                                None => None,
                            };
                            if occ > 2 * (2 * ell + 1) {
                                return Err(Error::Parse {
                                    line: line_no,
                                    message: format!(
                                        "occupancy {occ} exceeds 2(2l+1) = {} for n={n}, l={ell}",
                                        2 * (2 * ell + 1)
                                    ),
                                });
                            }
                            if ell >= n {
                                return Err(Error::Parse {
                                    line: line_no,
                                    message: format!("shell l={ell} >= n={n}"),
                                });
                            }
                            rec.shells.push(Shell {
                                n,
                                ell,
                                occupancy: occ,
                                binding_energy_ev: e,
                            });
                        }
                        "normsq" => {
                            let n = parse_num::<u32>(need("n")?, "n", line_no)?;
                            let v = parse_num::<f64>(need("value")?, "value", line_no)?;
                            rec.norm_sq_s.insert(n, v);
                        }
                        "normratio" => {
                            let n = parse_num::<u32>(need("n")?, "n", line_no)?;
                            let v = parse_num::<f64>(need("value")?, "value", line_no)?;
                            rec.norm_ratio.insert(n, v);
                        }
                        "defect" => {
                            rec.delta_h = parse_num::<f64>(need("h")?, "h", line_no)?;
                            rec.delta_inf = parse_num::<f64>(need("inf")?, "inf", line_no)?;
                            *has_defect = true;
                        }
                        "enp" => {
                            let n = parse_num::<u32>(need("n")?, "n", line_no)?;
                            let e = parse_num::<f64>(need("E")?, "E", line_no)?;
                            rec.e_np_ev.insert(n, e);
                        }
                        "prov" => {
                            for (k, v) in &fields {
                                if !["paper-table", "derived", "user"].contains(v) {
                                    return Err(Error::Parse {
                                        line: line_no,
                                        message: format!("unknown provenance tag '{v}'"),
                                    });
                                }
                                rec.provenance.insert((*k).to_string(), (*v).to_string());
                            }
                        }
                        _ => unreachable!(),
                    }
                    Ok(())
                })();
                if let Err(e) = result {
                    errors.push(e);
                }
            }
            other => {
                errors.push(Error::Parse {
                    line: line_no,
                    message: format!("unknown directive '{other}'"),
                });
            }
        }
    }
    finish(current.take(), &mut records, &mut errors);
    if errors.is_empty() {
        Ok(records)
    } else {
        Err(errors)
    }
}

/// Serialize records in the same line format `parse_atom_file` reads;
/// numeric fields use shortest round-trip formatting so that
/// parse(serialize(x)) == x exactly.
pub fn serialize_atom_records(records: &[AtomRecord]) -> String {
    let mut out = String::new();
    for rec in records {
        out.push_str(&format!("atom {} Z={}\n", rec.symbol, rec.z));
        for s in &rec.shells {
            match s.binding_energy_ev {
                Some(e) => out.push_str(&format!(
                    "  shell n={} l={} occ={} E={}\n",
                    s.n, s.ell, s.occupancy, e
                )),
                None => out.push_str(&format!(
                    "  shell n={} l={} occ={}\n",
                    s.n, s.ell, s.occupancy
                )),
            }
        }
        for (n, v) in &rec.norm_sq_s {
            out.push_str(&format!("  normsq n={n} value={v}\n"));
        }
        for (n, v) in &rec.norm_ratio {
            out.push_str(&format!("  normratio n={n} value={v}\n"));
        }
        out.push_str(&format!("  defect h={} inf={}\n", rec.delta_h, rec.delta_inf));
        for (n, e) in &rec.e_np_ev {
            out.push_str(&format!("  enp n={n} E={e}\n"));
        }
        for (k, v) in &rec.provenance {
            out.push_str(&format!("  prov {k}={v}\n"));
        }
    }
    out
}

const BUILTIN: &str = include_str!("../data/atoms.dat");

/// The eight bundled atoms (Z = 5, 7, 10, 14, 18, 32, 36, 50).
pub fn builtin_dataset() -> Vec<AtomRecord> {
    parse_atom_file(BUILTIN).expect("bundled dataset must parse")
}

/// Load a dataset: an explicit path wins, then the PHOTOCORR_DATA
/// environment variable, then the bundled records.
pub fn load_dataset(path: Option<&std::path::Path>) -> Result<Vec<AtomRecord>> {
    let chosen = match path {
        Some(p) => Some(p.to_path_buf()),
        None => std::env::var_os("PHOTOCORR_DATA").map(std::path::PathBuf::from),
    };
    match chosen {
        Some(p) => {
            let text = std::fs::read_to_string(&p)?;
            parse_atom_file(&text).map_err(|mut errs| errs.remove(0))
        }
        None => Ok(builtin_dataset()),
    }
}
