/**
 * Typed access to the explorer endpoints. The UI computes no statistics of
 * its own: everything on screen comes from one of these responses.
 */

export type Side = 'a' | 'b';

export interface MetaResponse {
  schema: string;
  languages: Record<Side, string>;
  parameters: {
    k: number;
    n_lemmas: number;
    min_joint: number;
    pivots: [string, string][];
    [key: string]: unknown;
  };
  corpora: Record<Side, { language: string; documents: number; tokens: number }>;
  sides: Side[];
}

export interface DictEntry {
  rank: number;
  lemma: string;
  pos: string;
  count: number;
  relative_freq_per_10k: number;
}

export interface DictResponse {
  side: Side;
  language: string;
  total_filtered_tokens: number;
  entries: DictEntry[];
}

export interface ComparePair {
  lemma_a: string | null;
  rank_a: number | null;
  lemma_b: string | null;
  rank_b: number | null;
}

export interface CompareResponse {
  k: number;
  overlap: number;
  lexicon_id: string;
  pairs: ComparePair[];
}

export interface CaPoint {
  lemma: string;
  x: number;
  y: number;
  ctr_x: number;
  ctr_y: number;
  cos2_sum: number;
  mass: number;
  cluster: number | null;
}

export interface CaResponse {
  side: Side;
  axes: [number, number];
  k_max: number;
  axis_inertia_pct: [number, number];
  inertia_pct: number[];
  points: CaPoint[];
}

export interface PivotEntry {
  lemma: string;
  k: number;
  F: number;
  z: number;
  log10p: number | null;
}

export interface PivotResponse {
  pivot: string;
  context: { unit: string; window?: number };
  context_count: number;
  total_contexts: number;
  entries: PivotEntry[];
}

export class PivotAbsentError extends Error {
  constructor(readonly word: string) {
    super(`pivot ${word} absent`);
  }
}

export class ApiError extends Error {
  constructor(readonly status: number, readonly body: string) {
    super(`API error ${status}: ${body}`);
  }
}

type FetchLike = (url: string) => Promise<{ status: number; text(): Promise<string> }>;

export class ApiClient {
  constructor(
    private readonly base: string = '',
    private readonly fetchImpl: FetchLike = (url) => fetch(url),
  ) {}

  private async getRaw(path: string): Promise<string> {
    const response = await this.fetchImpl(this.base + path);
    const text = await response.text();
    if (response.status === 404 && text.includes('"PivotAbsent"')) {
      const word = /word=([^&]*)/.exec(path)?.[1] ?? '';
      throw new PivotAbsentError(decodeURIComponent(word));
    }
    if (response.status !== 200) {
      throw new ApiError(response.status, text);
    }
    return text;
  }

  /** Parsed payload plus the raw response text (for byte-level checks). */
  private async getJson<T>(path: string): Promise<{ data: T; raw: string }> {
    const raw = await this.getRaw(path);
    return { data: JSON.parse(raw) as T, raw };
  }

  meta() {
    return this.getJson<MetaResponse>('/api/meta');
  }

  dict(side: Side, top: number) {
    return this.getJson<DictResponse>(`/api/dict/${side}?top=${top}`);
  }

  compare() {
    return this.getJson<CompareResponse>('/api/compare');
  }

  ca(side: Side, axes: [number, number]) {
    return this.getJson<CaResponse>(`/api/ca/${side}?axes=${axes[0]},${axes[1]}`);
  }

  pivot(side: Side, word: string, min: number) {
    return this.getJson<PivotResponse>(
      `/api/pivot/${side}?word=${encodeURIComponent(word)}&min=${min}`);
  }
}
