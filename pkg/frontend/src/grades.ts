// The five-grade linguistic scale and its reciprocal wire strings.

export const GRADES = ["EI", "MI", "SI", "VSI", "EMI"] as const;

export const GRADE_NAMES: Record<string, string> = {
  EI: "Equal importance",
  MI: "Moderate importance",
  SI: "Strong importance",
  VSI: "Very strong importance",
  EMI: "Extremely more importance",
};

/** All selectable judgment strings: direct grades then reciprocals. */
export const GRADE_CHOICES: string[] = [
  ...GRADES,
  ...GRADES.map((g) => `1/${g}`),
];

export function isReciprocal(grade: string): boolean {
  return grade.startsWith("1/");
}

export function reciprocalOf(grade: string): string {
  return isReciprocal(grade) ? grade.slice(2) : `1/${grade}`;
}

/** Tooltip text: the full scale name, flagged when reciprocal. */
export function gradeTooltip(grade: string): string {
  const base = isReciprocal(grade) ? grade.slice(2) : grade;
  const name = GRADE_NAMES[base] ?? base;
  return isReciprocal(grade) ? `${name} (reciprocal)` : name;
}

export function isValidGrade(grade: string): boolean {
  const base = isReciprocal(grade) ? grade.slice(2) : grade;
  return (GRADES as readonly string[]).includes(base);
}
