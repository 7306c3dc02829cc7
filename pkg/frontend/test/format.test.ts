/**
 * Byte-level parity of the client formatter with the server's canonical
 * 12-significant-digit float rendering, checked against a table generated
 * by the Python side (IEEE bit patterns paired with expected text).
 */

import assert from 'node:assert/strict';
import { readFileSync } from 'node:fs';
import { test } from 'node:test';
import { fileURLToPath } from 'node:url';

import { crc32, fmt12 } from '../src/format.js';

const fixturesDir = fileURLToPath(new URL('../../test/fixtures/', import.meta.url));

interface FormatCase {
  bits: string;
  text: string;
}

function bitsToDouble(hex: string): number {
  const buffer = new ArrayBuffer(8);
  const view = new DataView(buffer);
  for (let i = 0; i < 8; i++) {
    view.setUint8(i, parseInt(hex.slice(2 * i, 2 * i + 2), 16));
  }
  return view.getFloat64(0);
}

test('fmt12 matches the server formatter on every captured case', () => {
  const cases: FormatCase[] = JSON.parse(
    readFileSync(fixturesDir + 'format_cases.json', 'utf-8'));
  assert.ok(cases.length > 100);
  for (const { bits, text } of cases) {
    const value = bitsToDouble(bits);
    assert.equal(fmt12(value), text, `bits ${bits}`);
  }
});

test('fmt12 is a fixed point through parse and re-format', () => {
  for (const x of [1 / 3, Math.SQRT2, 6.1, -0.00012345, 1e-7, 12345.678901]) {
    const rendered = fmt12(x);
    assert.equal(fmt12(Number(rendered)), rendered);
  }
});

test('fmt12 rejects non-finite input', () => {
  assert.throws(() => fmt12(Number.NaN));
  assert.throws(() => fmt12(Number.POSITIVE_INFINITY));
});

test('crc32 matches zlib on unicode lemmas', () => {
  const cases: { lemma: string; crc32: number }[] = JSON.parse(
    readFileSync(fixturesDir + 'angle_cases.json', 'utf-8'));
  for (const { lemma, crc32: expected } of cases) {
    assert.equal(crc32(lemma), expected, lemma);
  }
});
