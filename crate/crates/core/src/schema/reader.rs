// SPDX-License-Identifier: Apache-2.0

//! Field access over `serde_json::Value` that records a diagnostic instead of
//! failing fast, so one pass reports every problem in a file.

use serde::de::DeserializeOwned;
use serde_json::{Map, Value};

use super::{Code, Diagnostic};
use crate::policy::normalize;

pub(crate) type Object = Map<String, Value>;

pub(crate) struct Reader {
    pub diags: Vec<Diagnostic>,
}

impl Reader {
    pub fn new() -> Self {
        Self { diags: Vec::new() }
    }

    pub fn push(&mut self, code: Code, path: impl Into<String>, message: impl Into<String>) {
        self.diags.push(Diagnostic::new(code, path, message));
    }

    pub fn has_errors(&self) -> bool {
        self.diags.iter().any(Diagnostic::is_error)
    }

    /// Parse the whole document; anything but a JSON object is `E001`.
    pub fn root(&mut self, bytes: &[u8], root: &str) -> Option<Object> {
        let value: Value = match serde_json::from_slice(bytes) {
            Ok(v) => v,
            Err(e) => {
                self.push(Code::E001, root, format!("malformed JSON: {e}"));
                return None;
            }
        };
        match value {
            Value::Object(map) => Some(map),
            _ => {
                self.push(Code::E001, root, "top-level value must be an object");
                None
            }
        }
    }

    pub fn object<'v>(&mut self, value: &'v Value, path: &str) -> Option<&'v Object> {
        let obj = value.as_object();
        if obj.is_none() {
            self.push(Code::E007, path, "expected an object");
        }
        obj
    }

    pub fn known_fields(&mut self, obj: &Object, path: &str, known: &[&str]) {
        for key in obj.keys().filter(|k| !known.contains(&k.as_str())) {
            self.push(
                Code::W001,
                format!("{path}/{key}"),
                format!("unknown field `{key}` ignored"),
            );
        }
    }

    fn field<'v>(&mut self, obj: &'v Object, key: &str, path: &str) -> Option<&'v Value> {
        let v = obj.get(key);
        if v.is_none() {
            self.push(
                Code::E002,
                format!("{path}/{key}"),
                format!("missing required field `{key}`"),
            );
        }
        v
    }

    pub fn string(&mut self, obj: &Object, key: &str, path: &str) -> Option<String> {
        let v = self.field(obj, key, path)?;
        match v.as_str() {
            Some(s) => Some(s.to_string()),
            None => {
                self.push(Code::E007, format!("{path}/{key}"), format!("`{key}` must be a string"));
                None
            }
        }
    }

    /// A string that is non-empty after normalization.
    pub fn text(&mut self, obj: &Object, key: &str, path: &str) -> Option<String> {
        let s = self.string(obj, key, path)?;
        if normalize(&s).is_empty() {
            self.push(
                Code::E007,
                format!("{path}/{key}"),
                format!("`{key}` must not be empty"),
            );
            return None;
        }
        Some(s)
    }

    pub fn slug(&mut self, obj: &Object, key: &str, path: &str) -> Option<String> {
        let s = self.string(obj, key, path)?;
        if !is_slug(&s) {
            self.push(
                Code::E007,
                format!("{path}/{key}"),
                format!("`{s}` is not a valid id (lowercase letters, digits, `-`, `_`)"),
            );
            return None;
        }
        Some(s)
    }

    pub fn array<'v>(&mut self, obj: &'v Object, key: &str, path: &str) -> Option<&'v Vec<Value>> {
        let v = self.field(obj, key, path)?;
        let arr = v.as_array();
        if arr.is_none() {
            self.push(Code::E007, format!("{path}/{key}"), format!("`{key}` must be an array"));
        }
        arr
    }

    /// A lowercase enum token; `bad` is the code used for unknown values.
    pub fn token<T: DeserializeOwned>(&mut self, obj: &Object, key: &str, path: &str, bad: Code) -> Option<T> {
        let v = self.field(obj, key, path)?;
        match serde_json::from_value::<T>(v.clone()) {
            Ok(t) => Some(t),
            Err(_) => {
                self.push(bad, format!("{path}/{key}"), format!("invalid `{key}` value {v}"));
                None
            }
        }
    }
}

pub(crate) fn is_slug(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-' || c == '_')
}
