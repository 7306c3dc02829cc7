/**
 * Rank tables: the side-by-side aligned top-k comparison and per-side
 * dictionary panels. Cells show API values verbatim (counts as integers,
 * rates through the canonical 12-digit format).
 */

import type { CompareResponse, DictResponse } from './api.js';
import { esc, fmt12 } from './format.js';

export function renderCompareTable(payload: CompareResponse): string {
  const rows = payload.pairs.map((pair) => {
    const aligned = pair.rank_a !== null && pair.rank_b !== null
      && pair.rank_b <= payload.k;
    const cls = aligned ? 'hit' : 'miss';
    const cell = (value: string | number | null, field: string) =>
      `<td class="${cls}" data-field="${field}">` +
      `${value === null ? '' : esc(String(value))}</td>`;
    return '<tr>' +
      cell(pair.rank_a, 'rank_a') + cell(pair.lemma_a, 'lemma_a') +
      cell(pair.lemma_b, 'lemma_b') + cell(pair.rank_b, 'rank_b') + '</tr>';
  });
  return (
    `<div class="overlap-line">overlap: <b data-field="overlap">${payload.overlap}</b>` +
    ` of <span data-field="k">${payload.k}</span></div>` +
    '<table class="rank-table"><thead><tr>' +
    '<th>rank A</th><th>lemma A</th><th>lemma B</th><th>rank B</th>' +
    `</tr></thead><tbody>${rows.join('')}</tbody></table>`);
}

export function renderDictTable(payload: DictResponse): string {
  const rows = payload.entries.map((entry) =>
    `<tr data-lemma="${esc(entry.lemma)}">` +
    `<td data-field="rank">${entry.rank}</td>` +
    `<td class="lemma-cell" data-lemma="${esc(entry.lemma)}">${esc(entry.lemma)}</td>` +
    `<td data-field="count">${entry.count}</td>` +
    `<td data-field="relative_freq_per_10k">${fmt12(entry.relative_freq_per_10k)}</td>` +
    '</tr>');
  return (
    `<div class="dict-caption">${esc(payload.language)}, ` +
    `<span data-field="total_filtered_tokens">${payload.total_filtered_tokens}</span>` +
    ' filtered tokens</div>' +
    '<table class="dict-table"><thead><tr>' +
    '<th>rank</th><th>lemma</th><th>count</th><th>per 10k</th>' +
    `</tr></thead><tbody>${rows.join('')}</tbody></table>`);
}

export function renderBreadcrumb(history: string[]): string {
  if (history.length === 0) {
    return '';
  }
  const crumbs = history.map((word) =>
    `<a href="#" class="crumb" data-lemma="${esc(word)}">${esc(word)}</a>`);
  return `<nav class="pivot-history">${crumbs.join(' › ')}</nav>`;
}
