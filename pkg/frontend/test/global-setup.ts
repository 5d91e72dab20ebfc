import type { TestProject } from "vitest/node";

import { launchService } from "./launch-service.js";

declare module "vitest" {
  export interface ProvidedContext {
    serviceUrl: string;
  }
}

export default async function setup(project: TestProject) {
  const service = await launchService();
  project.provide("serviceUrl", service.url);
  return () => service.stop();
}
