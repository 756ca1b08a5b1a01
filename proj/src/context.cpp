#include "padic_hyper/context.hpp"

namespace phyper {
namespace {

GammaTable make_gamma(const PadicContext& ctx, const ContextOptions& options) {
  if (options.cache_dir) return GammaTable::load_or_build(ctx, *options.cache_dir, options.gamma_budget);
  return GammaTable::build(ctx, options.gamma_budget);
}

}  // namespace

Context::Context(PadicContext ctx, const ContextOptions& options)
    : ctx_((ctx.validate(), ctx)), gamma_(make_gamma(ctx, options)), chars_(ctx) {}

std::shared_ptr<const Context> Context::create(uint32_t p, int N, const ContextOptions& options) {
  return std::make_shared<const Context>(PadicContext{p, N}, options);
}

}  // namespace phyper
