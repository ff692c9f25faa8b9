/**
 * Node.js binding for the uzlemma Uzbek lemmatizer.
 *
 * Pure marshalling: every call shells out to the Python CLI and returns its
 * JSON records untouched, so binding output is identical field-for-field to
 * `uzlemma lemmatize --format json`. No lemmatization logic lives here.
 */

import { spawnSync } from "node:child_process";

export interface LemmaRecord {
  token: string;
  lemma: string;
  pos: string;
  status: "resolved" | "unresolved";
  trace: string[];
}

export interface LemmatizerOptions {
  /** Python interpreter to run (default: $UZLEMMA_PYTHON or "python3"). */
  pythonExecutable?: string;
  /** Extra PYTHONPATH entry, for running against a source checkout. */
  pythonPath?: string;
}

const MODULE_NAME = "uzlemma";

export class UzbekLemmatizer {
  readonly wordsPath: string;
  readonly affixesPath: string;
  private readonly python: string;
  private readonly env: NodeJS.ProcessEnv;

  /**
   * Loads are validated eagerly: construction fails with the loader's own
   * message when either data file is missing or malformed. A constructed
   * handle is immutable and safe to share for concurrent lemmatize calls.
   */
  constructor(wordsPath: string, affixesPath: string, options: LemmatizerOptions = {}) {
    this.wordsPath = wordsPath;
    this.affixesPath = affixesPath;
    this.python = options.pythonExecutable ?? process.env.UZLEMMA_PYTHON ?? "python3";
    this.env = { ...process.env };
    if (options.pythonPath) {
      const existing = this.env.PYTHONPATH;
      this.env.PYTHONPATH = existing ? `${options.pythonPath}:${existing}` : options.pythonPath;
    }
    const probe = this.run(["validate", "--words", wordsPath, "--affixes", affixesPath]);
    if (probe.status !== 0) {
      throw new Error(probe.stderr.trim() || `data files failed to load (exit ${probe.status})`);
    }
  }

  /** Lemmatize UTF-8 text; one record per word token, input order. */
  lemmatize(text: string): LemmaRecord[] {
    const result = this.run(
      [
        "lemmatize",
        "--words",
        this.wordsPath,
        "--affixes",
        this.affixesPath,
        "--format",
        "json",
      ],
      text,
    );
    if (result.status !== 0) {
      throw new Error(result.stderr.trim() || `lemmatizer exited with ${result.status}`);
    }
    return JSON.parse(result.stdout) as LemmaRecord[];
  }

  private run(args: string[], input = ""): { status: number | null; stdout: string; stderr: string } {
    const proc = spawnSync(this.python, ["-m", MODULE_NAME, ...args], {
      input,
      encoding: "utf8",
      env: this.env,
      maxBuffer: 64 * 1024 * 1024,
    });
    if (proc.error) {
      throw new Error(`failed to run ${this.python}: ${proc.error.message}`);
    }
    return { status: proc.status, stdout: proc.stdout, stderr: proc.stderr };
  }
}
