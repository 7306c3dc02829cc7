/**
 * Typed access to the explorer endpoints. The UI computes no statistics of
 * its own: everything on screen comes from one of these responses.
 */
export class PivotAbsentError extends Error {
    constructor(word) {
        super(`pivot ${word} absent`);
        this.word = word;
    }
}
export class ApiError extends Error {
    constructor(status, body) {
        super(`API error ${status}: ${body}`);
        this.status = status;
        this.body = body;
    }
}
export class ApiClient {
    constructor(base = '', fetchImpl = (url) => fetch(url)) {
        this.base = base;
        this.fetchImpl = fetchImpl;
    }
    async getRaw(path) {
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
    async getJson(path) {
        const raw = await this.getRaw(path);
        return { data: JSON.parse(raw), raw };
    }
    meta() {
        return this.getJson('/api/meta');
    }
    dict(side, top) {
        return this.getJson(`/api/dict/${side}?top=${top}`);
    }
    compare() {
        return this.getJson('/api/compare');
    }
    ca(side, axes) {
        return this.getJson(`/api/ca/${side}?axes=${axes[0]},${axes[1]}`);
    }
    pivot(side, word, min) {
        return this.getJson(`/api/pivot/${side}?word=${encodeURIComponent(word)}&min=${min}`);
    }
}
