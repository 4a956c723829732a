// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use std::path::PathBuf;

use policyscroll::schema::{parse_config, parse_graph, NarrativeConfig, PracticeGraph};
use policyscroll::{parse_policy, PolicyDocument};

pub fn fixture_dir(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn read(dir: &str, file: &str) -> Vec<u8> {
    let path = fixture_dir(dir).join(file);
    std::fs::read(&path).unwrap_or_else(|e| panic!("reading {}: {e}", path.display()))
}

pub struct Inputs {
    pub policy: Vec<u8>,
    pub config: Vec<u8>,
    pub graph: Vec<u8>,
}

impl Inputs {
    pub fn load(dir: &str, stem: &str) -> Self {
        Self::load_with_config(dir, stem, &format!("{stem}.config.json"))
    }

    pub fn load_with_config(dir: &str, stem: &str, config: &str) -> Self {
        Self {
            policy: read(dir, &format!("{stem}.policy.txt")),
            config: read(dir, config),
            graph: read(dir, &format!("{stem}.graph.json")),
        }
    }

    pub fn parsed(&self) -> (NarrativeConfig, PracticeGraph, PolicyDocument) {
        let config = parse_config(&self.config).expect("config parses").value;
        let graph = parse_graph(&self.graph).expect("graph parses").value;
        let doc = parse_policy(&self.policy, &config.platform_name).expect("policy parses");
        (config, graph, doc)
    }
}

pub fn streamly() -> Inputs {
    Inputs::load("streamly", "streamly")
}

pub fn mini() -> Inputs {
    Inputs::load("mini", "acme")
}

/// Straightforward FIPS 180-4 SHA-256, kept separate from the `sha2` crate
/// the library uses so fingerprints can be cross-checked.
pub fn sha256_hex(data: &[u8]) -> String {
    const K: [u32; 64] = [
        0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4, 0xab1c5ed5, 0xd807aa98,
        0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
        0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8,
        0xbf597fc7, 0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
        0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b, 0xc24b8b70, 0xc76c51a3, 0xd192e819,
        0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
        0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
        0xc67178f2,
    ];
    let mut h: [u32; 8] = [
        0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a, 0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19,
    ];

    let mut msg = data.to_vec();
    let bit_len = (data.len() as u64).wrapping_mul(8);
    msg.push(0x80);
    while msg.len() % 64 != 56 {
        msg.push(0);
    }
    msg.extend_from_slice(&bit_len.to_be_bytes());

    for chunk in msg.chunks(64) {
        let mut w = [0u32; 64];
        for (i, word) in chunk.chunks(4).enumerate() {
            w[i] = u32::from_be_bytes([word[0], word[1], word[2], word[3]]);
        }
        for i in 16..64 {
            let s0 = w[i - 15].rotate_right(7) ^ w[i - 15].rotate_right(18) ^ (w[i - 15] >> 3);
            let s1 = w[i - 2].rotate_right(17) ^ w[i - 2].rotate_right(19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16].wrapping_add(s0).wrapping_add(w[i - 7]).wrapping_add(s1);
        }
        let [mut a, mut b, mut c, mut d, mut e, mut f, mut g, mut hh] = h;
        for i in 0..64 {
            let s1 = e.rotate_right(6) ^ e.rotate_right(11) ^ e.rotate_right(25);
            let ch = (e & f) ^ (!e & g);
            let t1 = hh
                .wrapping_add(s1)
                .wrapping_add(ch)
                .wrapping_add(K[i])
                .wrapping_add(w[i]);
            let s0 = a.rotate_right(2) ^ a.rotate_right(13) ^ a.rotate_right(22);
            let maj = (a & b) ^ (a & c) ^ (b & c);
            let t2 = s0.wrapping_add(maj);
            hh = g;
            g = f;
            f = e;
            e = d.wrapping_add(t1);
            d = c;
            c = b;
            b = a;
            a = t1.wrapping_add(t2);
        }
        for (slot, v) in h.iter_mut().zip([a, b, c, d, e, f, g, hh]) {
            *slot = slot.wrapping_add(v);
        }
    }
    h.iter().map(|v| format!("{v:08x}")).collect()
}

/// Recompute a bundle's fingerprint from its emitted bytes: blank the digest
/// text in place and hash.
pub fn recompute_fingerprint(bytes: &[u8]) -> (String, String) {
    let text = std::str::from_utf8(bytes).expect("utf-8 bundle");
    let marker = "\"digest\": \"";
    let start = text.find(marker).expect("digest field") + marker.len();
    let end = start + text[start..].find('"').expect("closing quote");
    let recorded = text[start..end].to_string();
    let blanked = format!("{}{}", &text[..start], &text[end..]);
    (recorded, sha256_hex(blanked.as_bytes()))
}
