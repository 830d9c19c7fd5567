/* tslint:disable */
/* eslint-disable */

/**
 * Local cohomology table and Cohen–Macaulay verdict.
 */
export function cm_report(text: string, field: string): string;

/**
 * Minimal linear irreducible resolution, with the Betti table of the dual ideal for simplicial input.
 */
export function resolution_report(text: string, field: string): string;

/**
 * One page (`0`, `1`, `2` or `inf`) of the Zeeman spectral sequence in a degree (`0` for ordinary).
 */
export function zeeman_page(text: string, field: string, which: string, degree: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly cm_report: (a: number, b: number, c: number, d: number) => [number, number];
    readonly resolution_report: (a: number, b: number, c: number, d: number) => [number, number];
    readonly zeeman_page: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
