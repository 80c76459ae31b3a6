use std::fmt::Display;

/// Process exit status, in the order of severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Negative = 1,
    Usage = 2,
    Internal = 3,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Records,
}

/// What a subcommand produced. `text` is the human report; `records` are
/// the same facts as `key=value` pairs; `verdict` goes on the `RESULT:` line.
#[derive(Debug)]
pub struct Report {
    pub exit: Exit,
    pub verdict: String,
    pub text: Vec<String>,
    pub records: Vec<(String, String)>,
}

impl Report {
    pub fn new(exit: Exit, verdict: impl Into<String>) -> Self {
        Report { exit, verdict: verdict.into(), text: Vec::new(), records: Vec::new() }
    }

    /// `Ok` when `good`, `Negative` otherwise.
    pub fn verdict(good: bool, yes: &str, no: &str) -> Self {
        if good {
            Report::new(Exit::Ok, yes)
        } else {
            Report::new(Exit::Negative, no)
        }
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.text.push(s.into());
        self
    }

    pub fn record(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.records.push((key.to_string(), value.to_string()));
        self
    }

    /// A multi-line artifact: verbatim in the human report, one `key=line`
    /// record per line.
    pub fn artifact(&mut self, key: &str, body: &str) -> &mut Self {
        for l in body.lines() {
            self.text.push(l.to_string());
            self.records.push((key.to_string(), l.to_string()));
        }
        self
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Plain => {
                for l in &self.text {
                    out.push_str(l);
                    out.push('\n');
                }
            }
            Format::Records => {
                for (k, v) in &self.records {
                    out.push_str(&format!("{k}={v}\n"));
                }
            }
        }
        out.push_str(&format!("RESULT: {}\n", self.verdict));
        out
    }
}

/// A failure before any verdict could be reached.
#[derive(Debug)]
pub struct Failure {
    pub exit: Exit,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Display) -> Self {
        Failure { exit: Exit::Usage, message: message.to_string() }
    }

    pub fn internal(message: impl Display) -> Self {
        Failure { exit: Exit::Internal, message: message.to_string() }
    }
}
