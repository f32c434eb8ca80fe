/* tslint:disable */
/* eslint-disable */

/**
 * A game in which the page plays Bob.
 */
export class Demo {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Bob's move and Alice's reply; an illegal move leaves the game as it was.
     */
    bob_move(vertex: number, edge: number, color: number): string;
    hints(): string;
    /**
     * `spec` is a session spec, e.g. `{"family":"star","params":[4]}`.
     */
    constructor(spec: string);
    /**
     * Spectate mode only.
     */
    step(): string;
    transcript(): string;
    view(): string;
}

/**
 * Bound calculator; `degeneracy = 0` skips the degeneracy-based bounds.
 */
export function bounds(delta: number, arboricity: number, degeneracy: number): string;

/**
 * Forest decomposition of a graph given as text, with `root_policy` one of
 * `first_vertex`, `max_degree` or `random:SEED`.
 */
export function decomposition(graph: string, root_policy: string): string;

/**
 * Graph text for a generated family.
 */
export function family_graph(name: string, params: Float64Array, seed: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_demo_free: (a: number, b: number) => void;
    readonly bounds: (a: number, b: number, c: number) => [number, number, number, number];
    readonly decomposition: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly demo_bob_move: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly demo_hints: (a: number) => [number, number];
    readonly demo_new: (a: number, b: number) => [number, number, number];
    readonly demo_step: (a: number) => [number, number, number, number];
    readonly demo_transcript: (a: number) => [number, number];
    readonly demo_view: (a: number) => [number, number];
    readonly family_graph: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
