/**
 * Number rendering that reproduces the server's canonical float format
 * (12 significant digits, C "%.12g" semantics) byte for byte, so values
 * shown in panels are exactly the substrings present in API responses.
 */
export function fmt12(x) {
    if (!Number.isFinite(x)) {
        throw new Error(`non-finite value cannot be displayed: ${x}`);
    }
    if (x === 0) {
        return '0'; // the server normalizes -0 the same way
    }
    const negative = x < 0;
    const [mantissa, expPart] = Math.abs(x).toExponential(11).split('e');
    const exp = parseInt(expPart, 10);
    const digits = mantissa.replace('.', ''); // exactly 12 digits after rounding
    let body;
    if (exp < -4 || exp >= 12) {
        const frac = digits.slice(1).replace(/0+$/, '');
        const sign = exp < 0 ? '-' : '+';
        const magnitude = String(Math.abs(exp)).padStart(2, '0');
        body = digits[0] + (frac ? '.' + frac : '') + 'e' + sign + magnitude;
    }
    else if (exp >= 0) {
        const intPart = digits.slice(0, exp + 1);
        const frac = digits.slice(exp + 1).replace(/0+$/, '');
        body = intPart + (frac ? '.' + frac : '');
    }
    else {
        const frac = ('0'.repeat(-exp - 1) + digits).replace(/0+$/, '');
        body = '0.' + frac;
    }
    return negative ? '-' + body : body;
}
const CRC_TABLE = (() => {
    const table = new Uint32Array(256);
    for (let n = 0; n < 256; n++) {
        let c = n;
        for (let k = 0; k < 8; k++) {
            c = c & 1 ? 0xedb88320 ^ (c >>> 1) : c >>> 1;
        }
        table[n] = c >>> 0;
    }
    return table;
})();
/** zlib-compatible CRC32 of the UTF-8 encoding of a string. */
export function crc32(text) {
    const bytes = new TextEncoder().encode(text);
    let crc = 0xffffffff;
    for (let i = 0; i < bytes.length; i++) {
        crc = CRC_TABLE[(crc ^ bytes[i]) & 0xff] ^ (crc >>> 8);
    }
    return (crc ^ 0xffffffff) >>> 0;
}
/** Escape text nodes and attribute values for HTML/SVG string assembly. */
export function esc(text) {
    return text
        .replace(/&/g, '&amp;')
        .replace(/</g, '&lt;')
        .replace(/>/g, '&gt;')
        .replace(/"/g, '&quot;');
}
