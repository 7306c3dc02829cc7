/**
 * Interactive factor map rendered as an SVG string. Every point of the
 * payload is always drawn; overlap culling applies to text labels only,
 * with priority given to the highest axis contributions so structuring
 * words stay readable. Zoom/pan is a group transform supplied by the view
 * state, unchanged by axis switches.
 */

import type { CaPoint, CaResponse } from './api.js';
import { esc, fmt12 } from './format.js';
import type { Transform } from './state.js';

export const MAP_WIDTH = 640;
export const MAP_HEIGHT = 560;
const MARGIN = 36;

export const CLUSTER_PALETTE = [
  '#1f77b4', '#d62728', '#2ca02c', '#9467bd',
  '#ff7f0e', '#8c564b', '#17becf', '#7f7f7f',
];

interface Box {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

function overlaps(a: Box, b: Box): boolean {
  return !(a.x1 < b.x0 || a.x0 > b.x1 || a.y1 < b.y0 || a.y0 > b.y1);
}

export interface PlacedPoint {
  point: CaPoint;
  px: number;
  py: number;
  radius: number;
  labelled: boolean;
}

/** Project data coordinates onto pixels and decide label visibility. */
export function layoutFactorMap(payload: CaResponse, zoom: number): PlacedPoint[] {
  const points = payload.points;
  if (points.length === 0) {
    return [];
  }
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  let xMin = Math.min(...xs);
  let xMax = Math.max(...xs);
  let yMin = Math.min(...ys);
  let yMax = Math.max(...ys);
  const xSpan = Math.max(xMax - xMin, 1e-9);
  const ySpan = Math.max(yMax - yMin, 1e-9);
  xMin -= 0.06 * xSpan;
  xMax += 0.06 * xSpan;
  yMin -= 0.06 * ySpan;
  yMax += 0.06 * ySpan;

  const maxMass = Math.max(...points.map((p) => p.mass), 0);
  const placed: PlacedPoint[] = points.map((point) => {
    const px = MARGIN + ((point.x - xMin) / (xMax - xMin)) * (MAP_WIDTH - 2 * MARGIN);
    const py = MAP_HEIGHT - MARGIN
      - ((point.y - yMin) / (yMax - yMin)) * (MAP_HEIGHT - 2 * MARGIN);
    const radius = maxMass > 0 ? 1.5 + 4.0 * Math.sqrt(point.mass / maxMass) : 2.2;
    return { point, px, py, radius, labelled: false };
  });

  // label culling by contribution priority; zoom increases label capacity
  const order = placed
    .map((p, i) => i)
    .sort((i, j) => {
      const ci = placed[i].point.ctr_x + placed[i].point.ctr_y;
      const cj = placed[j].point.ctr_x + placed[j].point.ctr_y;
      if (ci !== cj) {
        return cj - ci;
      }
      return placed[i].point.lemma < placed[j].point.lemma ? -1 : 1;
    });
  const boxes: Box[] = [];
  const fontH = 9 / Math.max(zoom, 0.2);
  for (const index of order) {
    const p = placed[index];
    const width = 5.6 * p.point.lemma.length / Math.max(zoom, 0.2);
    const box: Box = {
      x0: p.px + 2,
      y0: p.py - fontH / 2,
      x1: p.px + 2 + width,
      y1: p.py + fontH / 2,
    };
    if (!boxes.some((b) => overlaps(b, box))) {
      boxes.push(box);
      p.labelled = true;
    }
  }
  return placed;
}

function pointTooltip(p: CaPoint): string {
  const lines = [
    p.lemma,
    `x ${fmt12(p.x)}  y ${fmt12(p.y)}`,
    `ctr ${fmt12(p.ctr_x)} / ${fmt12(p.ctr_y)}`,
    `cos2 ${fmt12(p.cos2_sum)}`,
    `mass ${fmt12(p.mass)}`,
  ];
  return lines.join('\n');
}

export function renderFactorMap(payload: CaResponse | null, transform: Transform,
                                language: string): string {
  if (payload === null || payload.points.length === 0) {
    return `<div class="empty-state">no factor solution for ${esc(language)}</div>`;
  }
  const placed = layoutFactorMap(payload, transform.scale);
  const [axX, axY] = payload.axes;
  const [pctX, pctY] = payload.axis_inertia_pct;
  const parts: string[] = [];
  parts.push(
    `<svg class="factor-map" viewBox="0 0 ${MAP_WIDTH} ${MAP_HEIGHT}" ` +
    `xmlns="http://www.w3.org/2000/svg" data-side="${payload.side}">`);
  parts.push(`<rect class="map-bg" x="0" y="0" width="${MAP_WIDTH}" ` +
    `height="${MAP_HEIGHT}" fill="white"/>`);
  parts.push(
    `<g class="map-zoom" transform="translate(${transform.tx} ${transform.ty}) ` +
    `scale(${transform.scale})">`);
  for (const { point, px, py, radius, labelled } of placed) {
    const color = point.cluster === null
      ? '#1f77b4'
      : CLUSTER_PALETTE[point.cluster % CLUSTER_PALETTE.length];
    parts.push(
      `<circle class="map-point" data-lemma="${esc(point.lemma)}" ` +
      `cx="${px.toFixed(2)}" cy="${py.toFixed(2)}" r="${(radius / transform.scale).toFixed(2)}" ` +
      `fill="${color}" fill-opacity="0.75">` +
      `<title>${esc(pointTooltip(point))}</title></circle>`);
    if (labelled) {
      parts.push(
        `<text class="map-label" data-lemma="${esc(point.lemma)}" ` +
        `x="${(px + 2 + radius / transform.scale).toFixed(2)}" y="${(py + 3 / transform.scale).toFixed(2)}" ` +
        `font-size="${(9 / transform.scale).toFixed(2)}">${esc(point.lemma)}</text>`);
    }
  }
  parts.push('</g>');
  parts.push(
    `<text class="axis-caption" x="${MAP_WIDTH / 2}" y="${MAP_HEIGHT - 6}" ` +
    `text-anchor="middle">Axis ${axX} (${fmt12(pctX)}%)</text>`);
  parts.push(
    `<text class="axis-caption" x="12" y="${MAP_HEIGHT / 2}" text-anchor="middle" ` +
    `transform="rotate(-90 12 ${MAP_HEIGHT / 2})">Axis ${axY} (${fmt12(pctY)}%)</text>`);
  parts.push('</svg>');
  return parts.join('');
}

/** Hover panel content for the currently hovered lemma, if it is on the map. */
export function renderHoverDetails(payload: CaResponse | null,
                                   hovered: string | null): string {
  if (!payload || !hovered) {
    return '';
  }
  const point = payload.points.find((p) => p.lemma === hovered);
  if (!point) {
    return '';
  }
  return (
    `<span class="hover-lemma">${esc(point.lemma)}</span>` +
    ` mass <b data-field="mass">${fmt12(point.mass)}</b>` +
    ` ctr <b data-field="ctr_x">${fmt12(point.ctr_x)}</b> /` +
    ` <b data-field="ctr_y">${fmt12(point.ctr_y)}</b>` +
    ` cos2 <b data-field="cos2_sum">${fmt12(point.cos2_sum)}</b>`
  );
}
