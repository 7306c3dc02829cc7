/**
 * Pivot cooccurrence clouds. The layout follows the same rule as the
 * server's HTML report: terms ordered by weight, font size linear in the
 * index clipped to [0, max], placement on an elliptical spiral whose start
 * angle is the CRC32 of the lemma, so a given payload always lays out the
 * same way.
 */

import type { PivotEntry, PivotResponse } from './api.js';
import { crc32, esc, fmt12 } from './format.js';

export const CLOUD_WIDTH = 520;
export const CLOUD_HEIGHT = 340;
export const MAX_TERMS = 40;
const MIN_PT = 10;
const MAX_PT = 34;

const PALETTE = [
  '#1f77b4', '#d62728', '#2ca02c', '#9467bd',
  '#ff7f0e', '#8c564b', '#17becf', '#7f7f7f',
];

export function cloudFontSize(weight: number, weightMax: number): number {
  if (weightMax <= 0) {
    return MIN_PT;
  }
  const clipped = Math.min(Math.max(weight, 0), weightMax);
  return MIN_PT + (MAX_PT - MIN_PT) * (clipped / weightMax);
}

export function lemmaAngle(lemma: string): number {
  return (crc32(lemma) % 6283) / 1000;
}

export interface PlacedTerm {
  lemma: string;
  weight: number;
  x: number;
  y: number;
  font: number;
}

interface Box {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

/** Deterministic spiral layout; terms that find no room are dropped. */
export function layoutCloud(entries: { lemma: string; weight: number }[]): PlacedTerm[] {
  const chosen = [...entries]
    .sort((a, b) => (b.weight - a.weight) || (a.lemma < b.lemma ? -1 : 1))
    .slice(0, MAX_TERMS);
  const weightMax = chosen.reduce((m, e) => Math.max(m, e.weight), 0);
  const placedBoxes: Box[] = [];
  const placed: PlacedTerm[] = [];
  const cx = CLOUD_WIDTH / 2;
  const cy = CLOUD_HEIGHT / 2;
  for (const { lemma, weight } of chosen) {
    const font = cloudFontSize(weight, weightMax);
    const chars = [...lemma].length;
    const boxW = 0.62 * font * Math.max(chars, 1) + 4;
    const boxH = 1.1 * font + 2;
    const theta0 = lemmaAngle(lemma);
    for (let t = 0; t < 2500; t++) {
      const theta = theta0 + 0.35 * t;
      const radius = 1.1 * Math.pow(t, 0.82);
      const x = cx + radius * Math.cos(theta);
      const y = cy + 0.62 * radius * Math.sin(theta);
      const box: Box = {
        x0: x - boxW / 2, y0: y - boxH / 2,
        x1: x + boxW / 2, y1: y + boxH / 2,
      };
      if (box.x0 < 2 || box.y0 < 18 || box.x1 > CLOUD_WIDTH - 2
          || box.y1 > CLOUD_HEIGHT - 2) {
        continue;
      }
      const collision = placedBoxes.some(
        (b) => !(box.x1 < b.x0 || box.x0 > b.x1 || box.y1 < b.y0 || box.y0 > b.y1));
      if (!collision) {
        placedBoxes.push(box);
        placed.push({ lemma, weight, x, y, font });
        break;
      }
    }
  }
  return placed;
}

function entryTooltip(entry: PivotEntry): string {
  const parts = [
    `${entry.lemma}: z ${fmt12(entry.z)}`,
    `joint ${entry.k} of ${entry.F} contexts`,
  ];
  if (entry.log10p !== null) {
    parts.push(`log10 tail ${fmt12(entry.log10p)}`);
  }
  return parts.join('\n');
}

/**
 * The cloud panel: cooccurrents sized by their z index; each term is
 * clickable and becomes the new pivot (data-lemma carries the target).
 */
export function renderPivotCloud(payload: PivotResponse, language: string): string {
  const byLemma = new Map(payload.entries.map((e) => [e.lemma, e]));
  const placed = layoutCloud(
    payload.entries.map((e) => ({ lemma: e.lemma, weight: Math.max(0, e.z) })));
  const parts: string[] = [];
  parts.push(
    `<svg class="pivot-cloud" viewBox="0 0 ${CLOUD_WIDTH} ${CLOUD_HEIGHT}" ` +
    `xmlns="http://www.w3.org/2000/svg">`);
  parts.push(`<rect x="0" y="0" width="${CLOUD_WIDTH}" height="${CLOUD_HEIGHT}" ` +
    'fill="white"/>');
  parts.push(
    `<text class="cloud-title" x="${CLOUD_WIDTH / 2}" y="16" text-anchor="middle">` +
    `${esc(payload.pivot)} (${esc(language)}) in ` +
    `<tspan data-field="context_count">${payload.context_count}</tspan>` +
    ` of ${payload.total_contexts} contexts</text>`);
  placed.forEach(({ lemma, x, y, font }, index) => {
    const entry = byLemma.get(lemma);
    const title = entry ? `<title>${esc(entryTooltip(entry))}</title>` : '';
    parts.push(
      `<text class="cloud-term" data-lemma="${esc(lemma)}" ` +
      `x="${x.toFixed(2)}" y="${(y + 0.35 * font).toFixed(2)}" ` +
      `text-anchor="middle" font-size="${font.toFixed(2)}" ` +
      `fill="${PALETTE[index % PALETTE.length]}">${title}${esc(lemma)}</text>`);
  });
  parts.push('</svg>');
  return parts.join('');
}

/** Table listing under the cloud: exact API values, one row per entry. */
export function renderPivotTable(payload: PivotResponse, limit = 12): string {
  const rows = payload.entries.slice(0, limit).map((entry) => {
    const tail = entry.log10p === null ? '' : fmt12(entry.log10p);
    return (
      `<tr data-lemma="${esc(entry.lemma)}">` +
      `<td class="lemma-cell">${esc(entry.lemma)}</td>` +
      `<td data-field="k">${entry.k}</td>` +
      `<td data-field="F">${entry.F}</td>` +
      `<td data-field="z">${fmt12(entry.z)}</td>` +
      `<td data-field="log10p">${tail}</td></tr>`);
  });
  return (
    '<table class="pivot-table"><thead><tr>' +
    '<th>cooccurrent</th><th>k</th><th>F</th><th>z</th><th>log10p</th>' +
    `</tr></thead><tbody>${rows.join('')}</tbody></table>`);
}

export function renderPivotNotFound(word: string): string {
  return `<div class="empty-state pivot-missing">` +
    `word not found in sub-corpus: ${esc(word)}</div>`;
}
